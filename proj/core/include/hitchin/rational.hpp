#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace hitchin {

namespace detail {
__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

/// Exact rational number.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are
/// kept inline; everything else lives in a GMP `mpq_class`. The two
/// representations are an implementation detail: every value has a unique
/// canonical form (lowest terms, positive denominator) and results are
/// demoted back to the inline form whenever they fit.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>) {
            if (static_cast<std::int64_t>(value) != kInt64Min) {
                num_ = static_cast<std::int64_t>(value);
                return;
            }
        } else {
            if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(kInt64Max)) {
                num_ = static_cast<std::int64_t>(value);
                return;
            }
        }
        set_big(mpq_class(mpz_class(std::to_string(value))));
    }

    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    /// Parses `p`, `-p` or `p/q` (decimal integers of any size).
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] bool is_integer() const;

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;

    /// Canonical text: `p` for integers, `p/q` otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] Rational inverse() const;
    [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// `*this += a * b` without materialising the product when both fit inline.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

private:
    static constexpr std::int64_t kInt64Max = INT64_MAX;
    static constexpr std::int64_t kInt64Min = INT64_MIN;

    void set_big(mpq_class q);
    void assign_from_i128(detail::int128 num, detail::int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace hitchin
