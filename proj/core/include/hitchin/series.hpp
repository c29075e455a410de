#pragma once

#include "hitchin/rational.hpp"
#include "hitchin/tribool.hpp"

#include <concepts>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hitchin {

/// Valuation of a truncated series: either an exact exponent, or the marker
/// "at least N" when every known coefficient vanishes.
class Valuation {
public:
    static Valuation exactly(int v) { return Valuation(true, v); }
    static Valuation at_least(int bound) { return Valuation(false, bound); }

    [[nodiscard]] bool is_known() const noexcept { return known_; }
    /// Exact valuation; throws `InsufficientPrecision` for a marker.
    [[nodiscard]] int value() const;
    /// The exact value, or the marker's lower bound.
    [[nodiscard]] int lower_bound() const noexcept { return v_; }

    /// val >= b
    [[nodiscard]] Tribool at_least_value(int b) const noexcept;
    /// val == b
    [[nodiscard]] Tribool equals(int b) const noexcept;

    /// `3`, or `>=5` for a marker.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation(bool known, int v) : known_(known), v_(v) {}
    bool known_;
    int v_;
};

/// Laurent series in t with exact rational coefficients, known modulo t^N.
///
/// A series of precision N stores the coefficients of t^e for e < N; nothing
/// is claimed about higher exponents. Exact (polynomial) values carry the
/// precision `kExact`. Values are immutable in spirit: every operation
/// returns a fresh series.
///
/// Precision rules: a + b has precision min(N_a, N_b); a * b has precision
/// min(N_a + v_b, N_b + v_a), where the valuation of a zero series is taken to
/// be its precision.
class Series {
public:
    static constexpr int kExact = 1 << 29;

    /// Exact zero.
    Series() = default;
    /// Exact constant.
    Series(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    Series(I c) : Series(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Series zero(int precision = kExact);
    static Series monomial(const Rational& c, int exponent, int precision = kExact);
    /// Coefficients `coeffs[i]` of t^(low + i).
    static Series from_coefficients(int low, std::vector<Rational> coeffs, int precision = kExact);
    static Series from_terms(const std::map<int, Rational>& terms, int precision = kExact);

    [[nodiscard]] int precision() const noexcept { return prec_; }
    [[nodiscard]] bool is_exact() const noexcept { return prec_ >= kExact; }
    /// All exponents that may carry a nonzero coefficient are >= this.
    [[nodiscard]] int low_bound() const noexcept { return coeffs_.empty() ? prec_ : low_; }
    [[nodiscard]] Valuation valuation() const;
    /// True when every known coefficient is zero.
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of t^e; throws `InsufficientPrecision` when e >= precision().
    [[nodiscard]] Rational coeff(int e) const;
    /// Nonzero terms in increasing exponent order.
    [[nodiscard]] std::vector<std::pair<int, Rational>> terms() const;
    /// True when every coefficient is known to lie at exponents >= 0 (no pole).
    [[nodiscard]] bool is_integral() const noexcept { return coeffs_.empty() || low_ >= 0; }

    [[nodiscard]] Series truncated(int precision) const;
    /// Multiplication by t^k.
    [[nodiscard]] Series shifted(int k) const;

    Series operator-() const;
    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator*=(const Rational& c);
    Series& operator/=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator/(Series a, const Rational& c) { return a /= c; }

    /// Same precision and same known coefficients.
    friend bool operator==(const Series& a, const Series& b);

    /// Canonical text, e.g. `3*t^-1 - 1/2*t^0 + O(t^5)`; exact zero is `0`.
    [[nodiscard]] std::string str() const;
    /// Parses the text grammar documented in the README.
    static Series parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Series& s);

private:
    void normalize();

    int low_ = 0;
    std::vector<Rational> coeffs_;  // t^(low_ + i); trimmed so front and back are nonzero
    int prec_ = kExact;
};

/// Precision arithmetic that saturates at `Series::kExact`.
[[nodiscard]] int precision_add(int a, int b) noexcept;

}  // namespace hitchin
