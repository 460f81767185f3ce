#include "ramabern/bernoulli.hpp"

#include <mutex>

namespace ramabern {

Rat BernoulliCache::value(std::size_t n) {
    {
        std::shared_lock lock(mutex_);
        if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
}

void BernoulliCache::reserve(std::size_t n) {
    std::unique_lock lock(mutex_);
    extend(n);
}

void BernoulliCache::extend(std::size_t n) {
    if (values_.empty()) values_.push_back(Rat(1));
    // sum_{k=0}^{m} binom(m+1,k) B_k = 0 for m >= 1.
    for (std::size_t m = values_.size(); m <= n; ++m) {
        if (m % 2 == 1 && m > 1) {
            values_.push_back(Rat(0));
            continue;
        }
        Rat sum;
        for (std::size_t k = 0; k < m; ++k) {
            if (values_[k].is_zero()) continue;
            sum += Rat(binomial_z(m + 1, k)) * values_[k];
        }
        values_.push_back(-sum / Rat(static_cast<long>(m) + 1));
    }
}

Rat bernoulli(std::size_t n) {
    static BernoulliCache cache;
    return cache.value(n);
}

Rat psi(const Poly& p) {
    Rat sum;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) continue;
        sum += c[i] * bernoulli(i);
    }
    return sum;
}

Rat psi_binom_product(unsigned d, unsigned e, long i, long j) {
    if (i < 0 || i > static_cast<long>(d) || j < 0 || j > static_cast<long>(e))
        throw std::domain_error("psi_binom_product: requires 0 <= i <= d and 0 <= j <= e");
    const long exponent = static_cast<long>(d) + static_cast<long>(e) - i - j;
    const unsigned long lower = static_cast<unsigned long>(static_cast<long>(d) - i + j);
    Rat value(mpz_class(1), mpz_class(d + e + 1) * binomial_z(d + e, lower));
    return exponent % 2 ? -value : value;
}

Rat eval_psi_closed(unsigned d, unsigned e, long i, long j) {
    if (i < 0 || i + 1 > static_cast<long>(d) || j < 0 || j > static_cast<long>(e))
        throw std::domain_error("eval_psi_closed: requires 0 <= i <= d-1 and 0 <= j <= e");
    const long exponent = static_cast<long>(d) + static_cast<long>(e) - i - j - 1;
    const unsigned long lower = static_cast<unsigned long>(i + j + 1);
    Rat value(mpz_class(1), mpz_class(d + e + 1) * binomial_z(d + e, lower));
    return exponent % 2 ? -value : value;
}

Rat eval_psi2_closed(unsigned k) {
    const long kk = static_cast<long>(k);
    return Rat(-1) / Rat((2 * kk + 3) * (2 * kk + 1) * (2 * kk - 1));
}

}  // namespace ramabern
