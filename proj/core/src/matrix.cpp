#include "hitchin/matrix.hpp"

#include <limits>
#include <sstream>

namespace hitchin {

SeriesMatrix to_series(const QMatrix& m, int shift, int precision) {
    SeriesMatrix r(m.rows(), m.cols(), Series::zero(precision));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                r(i, j) = Series::monomial(m(i, j), shift, precision);
            }
        }
    }
    return r;
}

QMatrix coefficient(const SeriesMatrix& m, int e) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = m(i, j).coeff(e);
        }
    }
    return r;
}

int precision(const SeriesMatrix& m) {
    int p = Series::kExact;
    for (const auto& x : m.data()) {
        p = std::min(p, x.precision());
    }
    return p;
}

int low_bound(const SeriesMatrix& m) {
    int lo = Series::kExact;
    for (const auto& x : m.data()) {
        lo = std::min(lo, x.low_bound());
    }
    return lo;
}

SeriesMatrix shifted(const SeriesMatrix& m, int k) {
    SeriesMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = m(i, j).shifted(k);
        }
    }
    return r;
}

SeriesMatrix truncated(const SeriesMatrix& m, int prec) {
    SeriesMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(i, j) = m(i, j).truncated(prec);
        }
    }
    return r;
}

namespace {

template <class T>
std::string matrix_text(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) {
            out += "; ";
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out += ", ";
            }
            out += m(i, j).str();
        }
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string to_text(const SeriesMatrix& m) { return matrix_text(m); }
std::string to_text(const QMatrix& m) { return matrix_text(m); }

SeriesMatrix series_matrix_from_text(std::string_view text) {
    const auto rows = split(text, ';');
    std::vector<std::vector<Series>> entries;
    for (const auto& row : rows) {
        std::vector<Series> r;
        for (const auto& cell : split(row, ',')) {
            r.push_back(Series::parse(cell));
        }
        entries.push_back(std::move(r));
    }
    const std::size_t n = entries.size();
    SeriesMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i].size() != n) {
            throw StructuralError("matrix text: row " + std::to_string(i) + " has " +
                                  std::to_string(entries[i].size()) + " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = std::move(entries[i][j]);
        }
    }
    return m;
}

QMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    QMatrix m(n, n);
    m(i, j) = Rational(1);
    return m;
}

}  // namespace hitchin
