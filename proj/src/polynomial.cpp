#include "ramabern/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ramabern {

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) {
    normalize();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(Rat constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly Poly::variable() {
    return Poly{Rat(0), Rat(1)};
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::pow(unsigned n) const {
    Poly acc{Rat(1)};
    for (unsigned i = 0; i < n; ++i) acc *= *this;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * inner;
        acc += Poly(*it);
    }
    return acc;
}

Poly Poly::shifted(const Rat& c) const {
    return compose(Poly{c, Rat(1)});
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(out));
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += c_[i].str();
    }
    return out;
}

Poly Poly::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    std::vector<Rat> coeffs;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        std::string_view tok = trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
        coeffs.push_back(Rat::parse(tok));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Poly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

Poly binom_poly(long a, unsigned m) {
    Poly prod{Rat(1)};
    mpz_class fact = 1;
    for (unsigned t = 0; t < m; ++t) {
        prod *= Poly{Rat(a - static_cast<long>(t)), Rat(1)};
        fact *= t + 1;
    }
    return prod * Rat(mpz_class(1), fact);
}

Poly binom_poly_neg(long a, unsigned m) {
    Poly prod{Rat(1)};
    mpz_class fact = 1;
    for (unsigned t = 0; t < m; ++t) {
        prod *= Poly{Rat(a - static_cast<long>(t)), Rat(-1)};
        fact *= t + 1;
    }
    return prod * Rat(mpz_class(1), fact);
}

}  // namespace ramabern
