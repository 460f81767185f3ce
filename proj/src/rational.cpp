#include "ramabern/rational.hpp"

#include <cctype>
#include <ostream>

namespace ramabern {

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat::Rat(mpz_class num, mpz_class den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rat::Rat(mpz_class n) : q_(std::move(n)) {}

Rat Rat::parse(std::string_view text) {
    // Strict format: -?digits(/digits)? ; no whitespace, no '+' sign.
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool neg = false;
    if (!body.empty() && body.front() == '-') {
        neg = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
    }
    if (!is_digits(num_part) || !is_digits(den_part))
        throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (den == 0) throw std::invalid_argument("Rat: zero denominator in '" + std::string(text) + "'");
    if (neg) num = -num;
    return Rat(std::move(num), std::move(den));
}

std::string Rat::str() const {
    return q_.get_str();
}

std::string Rat::decimal(unsigned digits) const {
    if (digits == 0) digits = 1;
    mpf_class f(q_, 64 + static_cast<unsigned>(digits) * 4);
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Fg", static_cast<int>(digits), f.get_mpf_t());
    std::string out(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, out.size() + 1);
    return out;
}

Rat Rat::operator-() const {
    Rat r;
    r.q_ = -q_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.q_;
}

mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace ramabern
