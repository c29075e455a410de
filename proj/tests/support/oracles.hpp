#pragma once

// Slow, independent reference computations used to cross-check the library.

#include "hitchin/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using hitchin::Matrix;
using hitchin::QMatrix;
using hitchin::Rational;
using hitchin::Series;

/// Known coefficients of a product, term by term, with the product precision rule.
inline Series product(const Series& a, const Series& b) {
    std::map<int, Rational> out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out[ea + eb] += ca * cb;
        }
    }
    const int prec = std::min(hitchin::precision_add(a.precision(), b.low_bound()),
                              hitchin::precision_add(b.precision(), a.low_bound()));
    std::map<int, Rational> kept;
    for (const auto& [e, c] : out) {
        if (e < prec) {
            kept[e] = c;
        }
    }
    return Series::from_terms(kept, prec);
}

/// Leibniz expansion over all permutations.
template <class T>
T leibniz_det(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    T acc(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inversions += p[i] > p[j] ? 1 : 0;
            }
        }
        T term(1);
        for (std::size_t i = 0; i < n; ++i) {
            term = term * m(i, p[i]);
        }
        acc = inversions % 2 == 0 ? acc + term : acc - term;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& idx) {
    Matrix<T> r(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            r(i, j) = m(idx[i], idx[j]);
        }
    }
    return r;
}

/// c_k = (-1)^k * (sum of principal k x k minors), k = 1..upto.
template <class T>
std::vector<T> char_poly_by_minors(const Matrix<T>& m, std::size_t upto) {
    const std::size_t n = m.rows();
    std::vector<T> c;
    for (std::size_t k = 1; k <= upto; ++k) {
        T sum(0);
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i) {
                if (pick[i]) {
                    idx.push_back(i);
                }
            }
            sum = sum + leibniz_det(submatrix(m, idx));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        c.push_back(k % 2 == 0 ? sum : T(0) - sum);
    }
    return c;
}

/// Expansion along the first row: Pf(A) = sum_j (-1)^(j+1) a_{1j} Pf(A without 1, j).
template <class T>
T naive_pfaffian(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return T(1);
    }
    if (n % 2 == 1) {
        return T(0);
    }
    T acc(0);
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 1; k < n; ++k) {
            if (k != j) {
                rest.push_back(k);
            }
        }
        const T term = m(0, j) * naive_pfaffian(submatrix(m, rest));
        acc = j % 2 == 1 ? acc + term : acc - term;
    }
    return acc;
}

inline Rational random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline QMatrix random_matrix(std::size_t n, std::mt19937_64& rng, int bound) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = random_rational(rng, bound);
        }
    }
    return m;
}

inline QMatrix random_skew(std::size_t n, std::mt19937_64& rng, int bound) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_rational(rng, bound);
            m(j, i) = -m(i, j);
        }
    }
    return m;
}

/// Polynomial-in-t entries with random coefficients, known up to t^prec.
inline Series random_series(std::mt19937_64& rng, int low, int prec, int bound) {
    std::vector<Rational> c;
    std::uniform_int_distribution<int> d(-bound, bound);
    for (int e = low; e < prec; ++e) {
        c.emplace_back(d(rng));
    }
    return Series::from_coefficients(low, c, prec);
}

}  // namespace oracle
