#include "ramabern/sequences.hpp"

#include <stdexcept>

namespace ramabern {

RSeqKind rseq_kind_parse(std::string_view text) {
    if (text == "rplus" || text == "plus" || text == "+") return RSeqKind::Plus;
    if (text == "rminus" || text == "minus" || text == "-") return RSeqKind::Minus;
    throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "' (want rplus or rminus)");
}

std::string_view rseq_kind_name(RSeqKind kind) {
    return kind == RSeqKind::Plus ? "rplus" : "rminus";
}

Poly r_base(RSeqKind kind) {
    return binom_poly(kind == RSeqKind::Plus ? 2 : 1, 2);
}

Rat r_value(RSeqKind kind, std::size_t n) {
    return psi(r_base(kind).pow(static_cast<unsigned>(n)));
}

std::vector<Rat> r_sequence(RSeqKind kind, std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    const Poly base = r_base(kind);
    Poly power{Rat(1)};
    for (std::size_t n = 0; n < count; ++n) {
        out.push_back(psi(power));
        if (n + 1 < count) power *= base;
    }
    return out;
}

Rat u_shift_value(const Rat& u, std::size_t n) {
    // (x+u)(x+1-u) = x(x+1) + u(1-u)
    const Poly base{u * (Rat(1) - u), Rat(1), Rat(1)};
    return psi(base.pow(static_cast<unsigned>(n)));
}

}  // namespace ramabern
