#include "hitchin/series.hpp"

#include "hitchin/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace hitchin {

int Valuation::value() const {
    if (!known_) {
        throw InsufficientPrecision("valuation is only known to be >= " + std::to_string(v_));
    }
    return v_;
}

Tribool Valuation::at_least_value(int b) const noexcept {
    if (known_) {
        return to_tribool(v_ >= b);
    }
    return v_ >= b ? Tribool::True : Tribool::Unknown;
}

Tribool Valuation::equals(int b) const noexcept {
    if (known_) {
        return to_tribool(v_ == b);
    }
    return b < v_ ? Tribool::False : Tribool::Unknown;
}

std::string Valuation::str() const {
    return known_ ? std::to_string(v_) : ">=" + (v_ >= Series::kExact ? std::string("inf") : std::to_string(v_));
}

int precision_add(int a, int b) noexcept {
    if (a >= Series::kExact || b >= Series::kExact) {
        return Series::kExact;
    }
    const long long s = static_cast<long long>(a) + b;
    return s >= Series::kExact ? Series::kExact : static_cast<int>(s);
}

Series::Series(const Rational& c) {
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

Series Series::zero(int precision) {
    Series s;
    s.prec_ = std::min(precision, kExact);
    return s;
}

Series Series::monomial(const Rational& c, int exponent, int precision) {
    Series s;
    s.prec_ = std::min(precision, kExact);
    if (!c.is_zero() && exponent < s.prec_) {
        s.low_ = exponent;
        s.coeffs_.push_back(c);
    }
    return s;
}

Series Series::from_coefficients(int low, std::vector<Rational> coeffs, int precision) {
    Series s;
    s.low_ = low;
    s.coeffs_ = std::move(coeffs);
    s.prec_ = std::min(precision, kExact);
    s.normalize();
    return s;
}

Series Series::from_terms(const std::map<int, Rational>& terms, int precision) {
    if (terms.empty()) {
        return zero(precision);
    }
    const int low = terms.begin()->first;
    const int high = terms.rbegin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(high - low + 1));
    for (const auto& [e, c] : terms) {
        coeffs[static_cast<std::size_t>(e - low)] = c;
    }
    return from_coefficients(low, std::move(coeffs), precision);
}

void Series::normalize() {
    // drop everything at or beyond the precision
    if (!coeffs_.empty() && prec_ < kExact) {
        const long long keep = static_cast<long long>(prec_) - low_;
        if (keep <= 0) {
            coeffs_.clear();
        } else if (static_cast<std::size_t>(keep) < coeffs_.size()) {
            coeffs_.resize(static_cast<std::size_t>(keep));
        }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
}

Valuation Series::valuation() const {
    if (coeffs_.empty()) {
        return Valuation::at_least(prec_);
    }
    return Valuation::exactly(low_);
}

Rational Series::coeff(int e) const {
    if (e >= prec_) {
        throw InsufficientPrecision("coefficient of t^" + std::to_string(e) +
                                    " requested from a series known modulo t^" + std::to_string(prec_));
    }
    if (coeffs_.empty() || e < low_) {
        return Rational();
    }
    const auto idx = static_cast<std::size_t>(e - low_);
    return idx < coeffs_.size() ? coeffs_[idx] : Rational();
}

std::vector<std::pair<int, Rational>> Series::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
        }
    }
    return out;
}

Series Series::truncated(int precision) const {
    Series s = *this;
    s.prec_ = std::min(prec_, precision);
    s.normalize();
    return s;
}

Series Series::shifted(int k) const {
    Series s = *this;
    s.low_ += k;
    s.prec_ = precision_add(prec_, k);
    return s;
}

Series Series::operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) {
        c = -c;
    }
    return s;
}

Series& Series::operator+=(const Series& rhs) {
    const int prec = std::min(prec_, rhs.prec_);
    if (rhs.coeffs_.empty()) {
        prec_ = prec;
        normalize();
        return *this;
    }
    if (coeffs_.empty()) {
        *this = rhs;
        prec_ = prec;
        normalize();
        return *this;
    }
    const int low = std::min(low_, rhs.low_);
    long long high = std::max<long long>(low_ + static_cast<long long>(coeffs_.size()),
                                         rhs.low_ + static_cast<long long>(rhs.coeffs_.size()));
    high = std::min<long long>(high, prec);
    if (high <= low) {
        coeffs_.clear();
        prec_ = prec;
        return *this;
    }
    std::vector<Rational> out(static_cast<std::size_t>(high - low));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long long e = low_ + static_cast<long long>(i);
        if (e < high) {
            out[static_cast<std::size_t>(e - low)] = std::move(coeffs_[i]);
        }
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        const long long e = rhs.low_ + static_cast<long long>(i);
        if (e < high) {
            out[static_cast<std::size_t>(e - low)] += rhs.coeffs_[i];
        }
    }
    low_ = low;
    coeffs_ = std::move(out);
    prec_ = prec;
    normalize();
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    return *this += -rhs;
}

Series operator*(const Series& a, const Series& b) {
    const int va = a.coeffs_.empty() ? a.prec_ : a.low_;
    const int vb = b.coeffs_.empty() ? b.prec_ : b.low_;
    const int prec = std::min(precision_add(a.prec_, vb), precision_add(b.prec_, va));
    Series out;
    out.prec_ = prec;
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return out;
    }
    const int low = a.low_ + b.low_;
    const long long full = static_cast<long long>(a.coeffs_.size() + b.coeffs_.size()) - 1;
    const long long len = std::min<long long>(full, static_cast<long long>(prec) - low);
    if (len <= 0) {
        return out;
    }
    std::vector<Rational> r(static_cast<std::size_t>(len));
    const auto na = static_cast<long long>(a.coeffs_.size());
    const auto nb = static_cast<long long>(b.coeffs_.size());
    for (long long i = 0; i < na && i < len; ++i) {
        const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) {
            continue;
        }
        const long long jmax = std::min(nb, len - i);
        for (long long j = 0; j < jmax; ++j) {
            const Rational& bj = b.coeffs_[static_cast<std::size_t>(j)];
            if (!bj.is_zero()) {
                r[static_cast<std::size_t>(i + j)].add_product(ai, bj);
            }
        }
    }
    out.low_ = low;
    out.coeffs_ = std::move(r);
    out.normalize();
    return out;
}

Series& Series::operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
}

Series& Series::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Series& Series::operator/=(const Rational& c) {
    return *this *= c.inverse();
}

bool operator==(const Series& a, const Series& b) {
    if (a.prec_ != b.prec_ || a.coeffs_.size() != b.coeffs_.size()) {
        return false;
    }
    if (a.coeffs_.empty()) {
        return true;
    }
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string Series::str() const {
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        const bool neg = c.sign() < 0;
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += c.abs().str() + "*t^" + std::to_string(e);
        first = false;
    }
    if (!is_exact()) {
        out += first ? "" : " + ";
        out += "O(t^" + std::to_string(prec_) + ")";
        first = false;
    }
    return first ? "0" : out;
}

namespace {

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : s_(text) {}

    Series parse() {
        std::map<int, Rational> terms;
        int prec = Series::kExact;
        skip_ws();
        if (at_end()) {
            fail("empty series");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            if (peek() == 'O') {
                if (sign < 0) {
                    fail("'-O(...)' is not a valid precision marker");
                }
                const int n = parse_big_o();
                prec = std::min(prec, n);
            } else {
                auto [e, c] = parse_term();
                if (sign < 0) {
                    c = -c;
                }
                terms[e] += c;
            }
            skip_ws();
        }
        return Series::from_terms(terms, prec);
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("Series::parse: " + what + " at offset " + std::to_string(pos_) +
                                    " in '" + std::string(s_) + "'");
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
        skip_ws();
    }
    std::string digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            d.push_back(get());
        }
        return d;
    }
    int parse_int() {
        skip_ws();
        bool paren = false;
        if (peek() == '(') {
            paren = true;
            ++pos_;
            skip_ws();
        }
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = get() == '-' ? -1 : 1;
        }
        const std::string d = digits();
        if (d.empty() || d.size() > 9) {
            fail("expected a small integer exponent");
        }
        if (paren) {
            expect(')');
        }
        return sign * std::stoi(d);
    }
    int parse_exponent_after_t() {
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return parse_int();
        }
        return 1;
    }
    int parse_big_o() {
        ++pos_;  // 'O'
        expect('(');
        if (peek() != 't') {
            fail("expected 't' inside O(...)");
        }
        ++pos_;
        const int n = parse_exponent_after_t();
        expect(')');
        return n;
    }
    std::pair<int, Rational> parse_term() {
        Rational c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty()) {
                    fail("expected denominator");
                }
                num += "/" + den;
            }
            c = Rational::parse(num);
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 't') {
                    fail("expected 't' after '*'");
                }
            }
        }
        if (peek() == 't') {
            ++pos_;
            return {parse_exponent_after_t(), c};
        }
        if (!have_coeff) {
            fail("expected a term");
        }
        return {0, c};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Series Series::parse(std::string_view text) {
    return SeriesParser(text).parse();
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    return os << s.str();
}

}  // namespace hitchin
