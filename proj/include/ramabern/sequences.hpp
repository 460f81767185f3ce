#pragma once

#include "ramabern/bernoulli.hpp"

#include <string_view>

namespace ramabern {

/// Selects between the two companion sequences: Plus is built on
/// binom(x+2,2), Minus on binom(x+1,2). They agree except at index 1.
enum class RSeqKind { Plus, Minus };

/// Parses "rplus"/"rminus" (also accepts "plus"/"minus", "+"/"-").
RSeqKind rseq_kind_parse(std::string_view text);
std::string_view rseq_kind_name(RSeqKind kind);

/// The quadratic the sequence is built on: binom(x+2,2) or binom(x+1,2).
Poly r_base(RSeqKind kind);

/// R_n = psi(base^n).
Rat r_value(RSeqKind kind, std::size_t n);

/// First `count` values, computed with one polynomial multiplication
/// per index.
std::vector<Rat> r_sequence(RSeqKind kind, std::size_t count);

/// psi(((x+u)(x+1-u))^n) = psi((x(x+1) + u(1-u))^n).
Rat u_shift_value(const Rat& u, std::size_t n);

}  // namespace ramabern
