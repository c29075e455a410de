#include "hitchin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hitchin {

namespace {

using detail::int128;

constexpr int128 kMax = INT64_MAX;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

mpz_class mpz_from_i128(int128 v) {
    const bool neg = v < 0;
    detail::uint128 u = neg ? static_cast<detail::uint128>(-(v + 1)) + 1
                              : static_cast<detail::uint128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool fits(const mpz_class& z) {
    return z.fits_slong_p() && z != mpz_class(INT64_MIN);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    assign_from_i128(num, den);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::set_big(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (fits(n) && fits(d)) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

void Rational::assign_from_i128(int128 num, int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den != 1) {
        const int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    if (abs128(num) <= kMax && den <= kMax) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    q.canonicalize();
    set_big(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("Rational::parse: empty input");
    }
    auto valid_int = [](std::string_view part) {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i >= part.size()) {
            return false;
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    }
    if (num[0] == '+') {
        num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    }
    return Rational(mpq_class(n, d));
}

int Rational::sign() const noexcept {
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

mpq_class Rational::to_mpq() const {
    if (big_) {
        return *big_;
    }
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
    return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_));
}

std::string Rational::str() const {
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Rational: inverse of zero");
    }
    if (big_) {
        mpq_class q = 1 / *big_;
        return Rational(q);
    }
    Rational r;
    r.assign_from_i128(den_, num_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t sum = 0;
            if (!__builtin_add_overflow(num_, rhs.num_, &sum) && sum != INT64_MIN) {
                num_ = sum;
                return *this;
            }
        }
        const int128 n = static_cast<int128>(num_) * rhs.den_ + static_cast<int128>(rhs.num_) * den_;
        const int128 d = static_cast<int128>(den_) * rhs.den_;
        assign_from_i128(n, d);
        return *this;
    }
    set_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    if (!big_ && !rhs.big_ && den_ == 1 && rhs.den_ == 1) {
        std::int64_t diff = 0;
        if (!__builtin_sub_overflow(num_, rhs.num_, &diff) && diff != INT64_MIN) {
            num_ = diff;
            return *this;
        }
    }
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == 1 && rhs.den_ == 1) {
            std::int64_t prod = 0;
            if (!__builtin_mul_overflow(num_, rhs.num_, &prod) && prod != INT64_MIN) {
                num_ = prod;
                return *this;
            }
        }
        const int128 n = static_cast<int128>(num_) * rhs.num_;
        const int128 d = static_cast<int128>(den_) * rhs.den_;
        assign_from_i128(n, d);
        return *this;
    }
    set_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    return *this *= rhs.inverse();
}

void Rational::add_product(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        std::int64_t prod = 0;
        std::int64_t sum = 0;
        if (!__builtin_mul_overflow(a.num_, b.num_, &prod) &&
            !__builtin_add_overflow(num_, prod, &sum) && sum != INT64_MIN) {
            num_ = sum;
            return;
        }
    }
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    *this += a * b;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) {
        return false;  // canonical forms differ in size class
    }
    return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const int128 lhs = static_cast<int128>(a.num_) * b.den_;
        const int128 rhs = static_cast<int128>(b.num_) * a.den_;
        return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.str();
}

}  // namespace hitchin
