#pragma once

#include "ramabern/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ramabern {

/// Dense univariate polynomial over Rat. Coefficients are stored lowest
/// degree first with trailing zeros stripped; the zero polynomial is the
/// empty coefficient vector.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs);
    explicit Poly(std::vector<Rat> coeffs);
    explicit Poly(Rat constant);

    /// The monomial x.
    static Poly variable();

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    /// Coefficient of x^i (zero beyond the stored range).
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(); }
    /// Leading coefficient; zero for the zero polynomial.
    Rat leading() const { return c_.empty() ? Rat() : c_.back(); }

    /// Horner evaluation.
    Rat operator()(const Rat& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly p, const Rat& s) { return p *= s; }
    friend Poly operator*(const Rat& s, Poly p) { return p *= s; }

    /// p^n by iterated multiplication; p^0 = 1.
    Poly pow(unsigned n) const;
    /// p(q(x)) by Horner over polynomials.
    Poly compose(const Poly& inner) const;
    /// y -> p(y + c).
    Poly shifted(const Rat& c) const;
    Poly derivative() const;

    /// Text form "c0,c1,..." with each coefficient as "p" or "p/q";
    /// the zero polynomial renders as "0". Bit-exact and bidirectional.
    std::string str() const;
    static Poly parse(std::string_view text);

    friend bool operator==(const Poly&, const Poly&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    std::vector<Rat> c_;
    void normalize();
};

/// binom(x+a, m) = (x+a)(x+a-1)...(x+a-m+1)/m!, degree m, leading 1/m!.
Poly binom_poly(long a, unsigned m);
/// binom(-x+a, m); equals binom_poly(a, m) composed with -x.
Poly binom_poly_neg(long a, unsigned m);

}  // namespace ramabern
