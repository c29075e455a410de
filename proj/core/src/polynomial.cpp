#include "hitchin/polynomial.hpp"

#include <stdexcept>

namespace hitchin {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

QPoly QPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(c_[i] * Rational(static_cast<std::int64_t>(i)));
    }
    return QPoly(std::move(d));
}

QPoly QPoly::monic() const {
    if (c_.empty()) {
        return *this;
    }
    const Rational inv = c_.back().inverse();
    std::vector<Rational> m = c_;
    for (auto& x : m) {
        x *= inv;
    }
    return QPoly(std::move(m));
}

std::string QPoly::str() const {
    if (c_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += c.abs().str();
        if (k > 0) {
            out += "*u^" + std::to_string(k);
        }
    }
    return out;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        r[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        r[i] += b.c_[i];
    }
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        r[i] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
        r[i] -= b.c_[i];
    }
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return QPoly();
    }
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r[i + j].add_product(a.c_[i], b.c_[j]);
        }
    }
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("QPoly: division by zero polynomial");
    }
    std::vector<Rational> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) {
        return {QPoly(), a};
    }
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = rem[static_cast<std::size_t>(k)] * inv;
        if (f.is_zero()) {
            continue;
        }
        quo[static_cast<std::size_t>(k - db)] = f;
        for (int i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(k - db + i)] -= f * b.coeff(static_cast<std::size_t>(i));
        }
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a;
    QPoly y = b;
    while (!y.is_zero()) {
        QPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& q) {
    if (q.is_zero()) {
        throw std::domain_error("squarefree_decomposition: zero polynomial");
    }
    std::vector<QPoly> out;
    const QPoly f = q.monic();
    if (f.degree() == 0) {
        return out;
    }
    const QPoly fp = f.derivative();
    QPoly a = gcd(f, fp);
    QPoly b = divmod(f, a).first;
    QPoly c = divmod(fp, a).first;
    QPoly d = c - b.derivative();
    while (b.degree() > 0) {
        const QPoly g = gcd(b, d);
        out.push_back(g);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
    }
    return out;
}

bool is_square(const QPoly& q) {
    if (q.degree() <= 0) {
        return true;
    }
    const auto parts = squarefree_decomposition(q);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::size_t multiplicity = i + 1;
        if (multiplicity % 2 != 0 && parts[i].degree() > 0) {
            return false;
        }
    }
    return true;
}

}  // namespace hitchin
