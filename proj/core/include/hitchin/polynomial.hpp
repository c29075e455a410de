#pragma once

#include "hitchin/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hitchin {

/// Univariate polynomial over the rationals; coefficient i multiplies u^i.
/// Stored trimmed: the leading coefficient is nonzero unless the polynomial is zero.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return c_; }
    [[nodiscard]] Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    [[nodiscard]] Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

    [[nodiscard]] QPoly derivative() const;
    [[nodiscard]] QPoly monic() const;
    [[nodiscard]] std::string str() const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder; throws `std::domain_error` on division by zero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic greatest common divisor (zero when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);

/// Squarefree decomposition (Yun): monic squarefree, pairwise coprime factors a_i with
/// q = lc(q) * prod_i a_i^i. Entry i-1 holds a_i. Requires a nonzero input.
std::vector<QPoly> squarefree_decomposition(const QPoly& q);

/// True when q = r^2 for some complex polynomial r. Zero and constants are squares.
bool is_square(const QPoly& q);

}  // namespace hitchin
