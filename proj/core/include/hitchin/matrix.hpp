#pragma once

#include "hitchin/errors.hpp"
#include "hitchin/rational.hpp"
#include "hitchin/series.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hitchin {

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix square(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

    [[nodiscard]] Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                r(j, i) = (*this)(i, j);
            }
        }
        return r;
    }

    [[nodiscard]] T trace() const {
        T acc{};
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
            acc += (*this)(i, i);
        }
        return acc;
    }

    Matrix& operator+=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += rhs.data_[i];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= rhs.data_[i];
        }
        return *this;
    }
    template <class S>
    Matrix& scale(const S& c) {
        for (auto& x : data_) {
            x *= c;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) {
            x = -x;
        }
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw StructuralError("matrix product: shape mismatch");
        }
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero_entry(aik)) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!is_zero_entry(bkj)) {
                        accumulate(r(i, j), aik, bkj);
                    }
                }
            }
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Every known entry is zero.
    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x.is_zero(); });
    }

private:
    // Only exact zeros may be skipped: a truncated zero still limits precision.
    static bool is_zero_entry(const T& x) {
        if constexpr (std::is_same_v<T, Series>) {
            return x.is_zero() && x.is_exact();
        } else {
            return x.is_zero();
        }
    }
    static void accumulate(T& acc, const T& a, const T& b) {
        if constexpr (requires(T & t) { t.add_product(a, b); }) {
            acc.add_product(a, b);
        } else {
            acc += a * b;
        }
    }
    void check_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
            throw StructuralError("matrix sum: shape mismatch");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using SeriesMatrix = Matrix<Series>;

/// Entry-wise embedding of a constant matrix, optionally times t^shift.
SeriesMatrix to_series(const QMatrix& m, int shift = 0, int precision = Series::kExact);
/// Coefficient matrix of t^e; throws `InsufficientPrecision` when an entry is unknown there.
QMatrix coefficient(const SeriesMatrix& m, int e);
/// Minimum precision over all entries.
int precision(const SeriesMatrix& m);
/// Minimum over entries of `Series::low_bound()`.
int low_bound(const SeriesMatrix& m);
/// Multiplies every entry by t^k.
SeriesMatrix shifted(const SeriesMatrix& m, int k);
/// Truncates every entry to the given precision.
SeriesMatrix truncated(const SeriesMatrix& m, int precision);

/// Row-major text: rows separated by `;`, entries by `,`, each entry in the series grammar.
std::string to_text(const SeriesMatrix& m);
SeriesMatrix series_matrix_from_text(std::string_view text);
std::string to_text(const QMatrix& m);

/// [a, b] = ab - ba
template <class T>
Matrix<T> bracket(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

/// Elementary matrix with a single 1 at (i, j).
QMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

}  // namespace hitchin
