#pragma once

#include "ramabern/polynomial.hpp"

#include <cstddef>
#include <shared_mutex>
#include <vector>

namespace ramabern {

/// Memoized Bernoulli numbers under the B_1 = -1/2 convention
/// (generating function t/(e^t - 1)). Concurrent reads are fine;
/// extending the table takes the exclusive lock.
class BernoulliCache {
public:
    Rat value(std::size_t n);
    /// Precompute through index n.
    void reserve(std::size_t n);

private:
    std::shared_mutex mutex_;
    std::vector<Rat> values_;
    void extend(std::size_t n);
};

/// B_n from the process-wide cache.
Rat bernoulli(std::size_t n);

/// The linear form sending x^n to B_n, extended by linearity.
Rat psi(const Poly& p);

/// Closed form for psi(binom(x+i,d) * binom(x+j,e)), valid on
/// 0 <= i <= d, 0 <= j <= e. Out-of-range input is rejected.
Rat psi_binom_product(unsigned d, unsigned e, long i, long j);

/// Closed form for psi(binom(-x+i,d) * binom(x+j,e)), valid on
/// 0 <= i <= d-1, 0 <= j <= e. Out-of-range input is rejected.
Rat eval_psi_closed(unsigned d, unsigned e, long i, long j);

/// Closed form for psi(binom(x+2,2) * binom(-x-3+k,k) * binom(x+k,k)):
/// -1/((2k+3)(2k+1)(2k-1)).
Rat eval_psi2_closed(unsigned k);

}  // namespace ramabern
