#pragma once

#include "hitchin/errors.hpp"
#include "hitchin/matrix.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hitchin {

namespace detail {

template <class T>
bool exact_zero(const T& x) {
    if constexpr (std::is_same_v<T, Series>) {
        return x.is_zero() && x.is_exact();
    } else {
        return x.is_zero();
    }
}

inline void require_square(std::size_t rows, std::size_t cols, const char* what) {
    if (rows != cols) {
        throw StructuralError(std::string(what) + ": matrix is not square");
    }
}

}  // namespace detail

/// Coefficients c_1..c_k of det(lambda I - m) = lambda^n + sum_j c_j lambda^(n-j),
/// with k = min(n, upto). Faddeev-LeVerrier; divides only by integers.
template <class T>
std::vector<T> char_poly_coeffs(const Matrix<T>& m, std::size_t upto = SIZE_MAX) {
    detail::require_square(m.rows(), m.cols(), "char_poly_coeffs");
    const std::size_t n = m.rows();
    const std::size_t k_max = std::min(n, upto);
    std::vector<T> c;
    c.reserve(k_max);
    Matrix<T> b = Matrix<T>::identity(n);
    for (std::size_t k = 1; k <= k_max; ++k) {
        Matrix<T> a = m * b;
        T ck = -a.trace();
        ck /= Rational(static_cast<std::int64_t>(k));
        if (k < k_max) {
            for (std::size_t i = 0; i < n; ++i) {
                a(i, i) += ck;
            }
            b = std::move(a);
        }
        c.push_back(std::move(ck));
    }
    return c;
}

/// Division-free determinant by dynamic programming over column subsets, O(n 2^n).
template <class T>
T determinant(const Matrix<T>& m) {
    detail::require_square(m.rows(), m.cols(), "determinant");
    const std::size_t n = m.rows();
    if (n == 0) {
        return T(1);
    }
    if (n > 24) {
        throw StructuralError("determinant: size too large for subset expansion");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::optional<T>> dp(std::size_t{1} << n);
    dp[0] = T(1);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (!dp[mask]) {
            continue;
        }
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        for (std::size_t c = 0; c < n; ++c) {
            if ((mask >> c) & 1U) {
                continue;
            }
            const T& entry = m(row, c);
            if (detail::exact_zero(entry)) {
                continue;
            }
            T term = *dp[mask] * entry;
            if (std::popcount(mask >> (c + 1)) % 2 != 0) {
                term = -term;
            }
            auto& slot = dp[mask | (std::uint32_t{1} << c)];
            if (slot) {
                *slot += term;
            } else {
                slot = std::move(term);
            }
        }
        dp[mask].reset();
    }
    return dp[full] ? *dp[full] : T();
}

/// Pfaffian by expansion along the first row, memoised over index subsets.
/// Throws `StructuralError` unless m is skew-symmetric of even size.
template <class T>
T pfaffian(const Matrix<T>& m) {
    detail::require_square(m.rows(), m.cols(), "pfaffian");
    const std::size_t n = m.rows();
    if (n % 2 != 0) {
        throw StructuralError("pfaffian: odd size " + std::to_string(n));
    }
    if (n > 24) {
        throw StructuralError("pfaffian: size too large");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!m(i, i).is_zero()) {
            throw StructuralError("pfaffian: nonzero diagonal entry");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(m(i, j) == -m(j, i))) {
                throw StructuralError("pfaffian: matrix is not skew-symmetric");
            }
        }
    }
    if (n == 0) {
        return T(1);
    }
    std::vector<std::optional<T>> memo(std::size_t{1} << n);
    auto rec = [&](auto&& self, std::uint32_t mask) -> const T& {
        auto& slot = memo[mask];
        if (slot) {
            return *slot;
        }
        if (mask == 0) {
            slot = T(1);
            return *slot;
        }
        const int i = std::countr_zero(mask);
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << i);
        T acc{};
        int between = 0;
        for (int j = i + 1; j < static_cast<int>(n); ++j) {
            if (!((rest >> j) & 1U)) {
                continue;
            }
            const T& a = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!detail::exact_zero(a)) {
                const T& sub = self(self, rest & ~(std::uint32_t{1} << j));
                T term = a * sub;
                if (between % 2 != 0) {
                    term = -term;
                }
                acc += term;
            }
            ++between;
        }
        slot = std::move(acc);
        return *slot;
    };
    return rec(rec, (n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1));
}

/// The symmetric multilinear form attached to c_j: the trace over the j-th exterior
/// power of  v_1 ^ ... ^ v_j  ->  (-1)^j / j! * sum_sigma x_sigma(1) v_1 ^ ... ^ x_sigma(j) v_j.
/// polarized_invariant(j, {A, ..., A}) == c_j(A).
template <class T>
T polarized_invariant(std::size_t j, const std::vector<Matrix<T>>& xs) {
    if (xs.size() != j) {
        throw StructuralError("polarized_invariant: expected " + std::to_string(j) + " matrices, got " +
                              std::to_string(xs.size()));
    }
    if (j == 0) {
        return T(1);
    }
    const std::size_t n = xs.front().rows();
    for (const auto& x : xs) {
        if (x.rows() != n || x.cols() != n) {
            throw StructuralError("polarized_invariant: size mismatch");
        }
    }
    if (j > n) {
        throw StructuralError("polarized_invariant: j exceeds the matrix size");
    }
    if (j > 12) {
        throw StructuralError("polarized_invariant: j too large");
    }
    const std::uint32_t jfull = (std::uint32_t{1} << j) - 1;
    // state index = rows_used | (mats_used << j)
    std::vector<std::optional<T>> dp(std::size_t{1} << (2 * j));
    std::vector<std::optional<T>> next(dp.size());
    std::vector<std::size_t> subset(j);
    T total{};

    auto visit = [&]() {
        std::fill(dp.begin(), dp.end(), std::nullopt);
        dp[0] = T(1);
        for (std::size_t k = 0; k < j; ++k) {
            std::fill(next.begin(), next.end(), std::nullopt);
            for (std::uint32_t state = 0; state < dp.size(); ++state) {
                if (!dp[state]) {
                    continue;
                }
                const std::uint32_t rows_used = state & jfull;
                const std::uint32_t mats_used = state >> j;
                for (std::size_t r = 0; r < j; ++r) {
                    if ((rows_used >> r) & 1U) {
                        continue;
                    }
                    const bool flip = std::popcount(rows_used >> (r + 1)) % 2 != 0;
                    for (std::size_t q = 0; q < j; ++q) {
                        if ((mats_used >> q) & 1U) {
                            continue;
                        }
                        const T& entry = xs[q](subset[r], subset[k]);
                        if (detail::exact_zero(entry)) {
                            continue;
                        }
                        T term = *dp[state] * entry;
                        if (flip) {
                            term = -term;
                        }
                        const std::uint32_t ns = (rows_used | (std::uint32_t{1} << r)) |
                                                 ((mats_used | (std::uint32_t{1} << q)) << j);
                        if (next[ns]) {
                            *next[ns] += term;
                        } else {
                            next[ns] = std::move(term);
                        }
                    }
                }
            }
            std::swap(dp, next);
        }
        const std::uint32_t done = jfull | (jfull << j);
        if (dp[done]) {
            total += *dp[done];
        }
    };

    // enumerate j-subsets of {0..n-1} in lexicographic order
    for (std::size_t i = 0; i < j; ++i) {
        subset[i] = i;
    }
    while (true) {
        visit();
        std::size_t i = j;
        while (i > 0 && subset[i - 1] == n - j + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++subset[i - 1];
        for (std::size_t t = i; t < j; ++t) {
            subset[t] = subset[t - 1] + 1;
        }
    }

    Rational factor(1);
    for (std::size_t k = 2; k <= j; ++k) {
        factor *= Rational(static_cast<std::int64_t>(k));
    }
    factor = factor.inverse();
    if (j % 2 != 0) {
        factor = -factor;
    }
    total *= factor;
    return total;
}

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const QMatrix& m);
/// Rank of a matrix whose entries are constant series; throws `StructuralError` otherwise.
std::size_t rank_over_rationals(const SeriesMatrix& m);
/// Constant part of a series matrix whose entries are constants.
QMatrix constant_matrix(const SeriesMatrix& m);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
/// Basis of { x : m x = 0 } as column vectors.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
/// Inverse; throws `StructuralError` if singular.
QMatrix inverse(const QMatrix& m);

/// Entries of m in row-major order.
std::vector<Rational> flatten(const QMatrix& m);
QMatrix unflatten(const std::vector<Rational>& v, std::size_t rows, std::size_t cols);

/// Coordinates with respect to a fixed family of vectors.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(const std::vector<std::vector<Rational>>& vectors);
    explicit SpanSolver(const std::vector<QMatrix>& matrices);

    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return count_; }
    [[nodiscard]] bool contains(const std::vector<Rational>& v) const;
    [[nodiscard]] bool contains(const QMatrix& m) const;
    /// Some coefficients c with sum c_i v_i = v, or nothing when v is outside the span.
    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;
    [[nodiscard]] std::optional<std::vector<Rational>> coordinates(const QMatrix& m) const;

private:
    std::size_t dim_ = 0;
    std::size_t count_ = 0;
    std::vector<std::vector<Rational>> rows_;    // reduced echelon rows
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<Rational>> combos_;  // rows_[i] = sum combos_[i][k] * input_k
};

/// Basis of { X in span(basis) : X(i, j) = 0 whenever allowed(i, j) is false }.
template <class Pred>
std::vector<QMatrix> restrict_span(const std::vector<QMatrix>& basis, Pred allowed) {
    if (basis.empty()) {
        return {};
    }
    const std::size_t rows = basis.front().rows();
    const std::size_t cols = basis.front().cols();
    std::vector<std::pair<std::size_t, std::size_t>> forbidden;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (!allowed(i, j)) {
                forbidden.emplace_back(i, j);
            }
        }
    }
    QMatrix system(forbidden.size(), basis.size());
    for (std::size_t r = 0; r < forbidden.size(); ++r) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            system(r, k) = basis[k](forbidden[r].first, forbidden[r].second);
        }
    }
    std::vector<QMatrix> out;
    for (const auto& v : nullspace(system)) {
        QMatrix x(rows, cols);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!v[k].is_zero()) {
                QMatrix term = basis[k];
                term.scale(v[k]);
                x += term;
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace hitchin
