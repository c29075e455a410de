#include "hitchin/linalg.hpp"

namespace hitchin {

std::size_t rank(const QMatrix& input) {
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    // clear denominators row by row so the elimination stays integral
    QMatrix a = input;
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!a(i, j).is_zero()) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
            }
        }
        if (l != 1) {
            const Rational scale{mpq_class(l)};
            for (std::size_t j = 0; j < cols; ++j) {
                a(i, j) *= scale;
            }
        }
    }
    Rational prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a(piv, c).is_zero()) {
            ++piv;
        }
        if (piv == rows) {
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) {
                std::swap(a(piv, j), a(r, j));
            }
        }
        const Rational p = a(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Rational f = a(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Rational v = p * a(i, j);
                v -= f * a(r, j);
                v /= prev;
                a(i, j) = std::move(v);
            }
            a(i, c) = Rational();
        }
        prev = p;
        ++r;
    }
    return r;
}

QMatrix constant_matrix(const SeriesMatrix& m) {
    QMatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Series& s = m(i, j);
            const auto terms = s.terms();
            if (s.precision() < 1 || terms.size() > 1 || (terms.size() == 1 && terms.front().first != 0)) {
                throw StructuralError("rank_over_rationals: entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is not a constant: " + s.str());
            }
            if (!terms.empty()) {
                q(i, j) = terms.front().second;
            }
        }
    }
    return q;
}

std::size_t rank_over_rationals(const SeriesMatrix& m) {
    return rank(constant_matrix(m));
}

std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) {
            ++piv;
        }
        if (piv == a.rows()) {
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a(piv, j), a(r, j));
            }
        }
        const Rational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) {
            a(r, j) *= inv;
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) {
                continue;
            }
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (!a(r, j).is_zero()) {
                    a(i, j) -= f * a(r, j);
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    QMatrix a = m;
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -a(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    detail::require_square(m.rows(), m.cols(), "inverse");
    const std::size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            aug(i, j) = m(i, j);
        }
        aug(i, n + i) = Rational(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw StructuralError("inverse: matrix is singular");
    }
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv(i, j) = aug(i, n + j);
        }
    }
    return inv;
}

std::vector<Rational> flatten(const QMatrix& m) {
    return m.data();
}

QMatrix unflatten(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) {
        throw StructuralError("unflatten: size mismatch");
    }
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = v[i * cols + j];
        }
    }
    return m;
}

SpanSolver::SpanSolver(const std::vector<QMatrix>& matrices) {
    std::vector<std::vector<Rational>> vs;
    vs.reserve(matrices.size());
    for (const auto& m : matrices) {
        vs.push_back(flatten(m));
    }
    *this = SpanSolver(vs);
}

SpanSolver::SpanSolver(const std::vector<std::vector<Rational>>& vectors) : count_(vectors.size()) {
    if (vectors.empty()) {
        return;
    }
    dim_ = vectors.front().size();
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        if (vectors[k].size() != dim_) {
            throw StructuralError("SpanSolver: vectors of different lengths");
        }
        std::vector<Rational> v = vectors[k];
        std::vector<Rational> combo(count_);
        combo[k] = Rational(1);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = v[pivots_[i]];
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                if (!rows_[i][c].is_zero()) {
                    v[c] -= f * rows_[i][c];
                }
            }
            for (std::size_t c = 0; c < count_; ++c) {
                if (!combos_[i][c].is_zero()) {
                    combo[c] -= f * combos_[i][c];
                }
            }
        }
        std::size_t p = 0;
        while (p < dim_ && v[p].is_zero()) {
            ++p;
        }
        if (p == dim_) {
            continue;
        }
        const Rational inv = v[p].inverse();
        for (auto& x : v) {
            x *= inv;
        }
        for (auto& x : combo) {
            x *= inv;
        }
        // keep earlier rows reduced against the new pivot
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational f = rows_[i][p];
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                if (!v[c].is_zero()) {
                    rows_[i][c] -= f * v[c];
                }
            }
            for (std::size_t c = 0; c < count_; ++c) {
                if (!combo[c].is_zero()) {
                    combos_[i][c] -= f * combo[c];
                }
            }
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        combos_.push_back(std::move(combo));
    }
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const std::vector<Rational>& input) const {
    if (count_ == 0) {
        for (const auto& x : input) {
            if (!x.is_zero()) {
                return std::nullopt;
            }
        }
        return std::vector<Rational>{};
    }
    if (input.size() != dim_) {
        throw StructuralError("SpanSolver: vector length mismatch");
    }
    std::vector<Rational> v = input;
    std::vector<Rational> coords(count_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational f = v[pivots_[i]];
        if (f.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!rows_[i][c].is_zero()) {
                v[c] -= f * rows_[i][c];
            }
        }
        for (std::size_t c = 0; c < count_; ++c) {
            if (!combos_[i][c].is_zero()) {
                coords[c] += f * combos_[i][c];
            }
        }
    }
    for (const auto& x : v) {
        if (!x.is_zero()) {
            return std::nullopt;
        }
    }
    return coords;
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(const QMatrix& m) const {
    return coordinates(flatten(m));
}

bool SpanSolver::contains(const std::vector<Rational>& v) const {
    return coordinates(v).has_value();
}

bool SpanSolver::contains(const QMatrix& m) const {
    return coordinates(m).has_value();
}

}  // namespace hitchin
