#include "ramabern/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ramabern {

namespace {

std::vector<CatalogEntry> build() {
    const Poly xx1{Rat(0), Rat(1), Rat(1)};   // x(x+1)
    const Poly x1x2{Rat(2), Rat(3), Rat(1)};  // (x+1)(x+2)

    std::vector<CatalogEntry> v;
    v.push_back({"T1",
                 "Racah family (0,-1/2,0,0): Favard moments equal 2^n R-_n; "
                 "Psi-side weight 1 at argument x(x+1)",
                 TheoremSpec{RacahParams{Rat(0), Rat(-1, 2), Rat(0), Rat(0)}, Poly(Rat(1)), xx1,
                             Rat(0), Rat(1), TargetSeq{RSeqKind::Minus, 0}}});
    v.push_back({"T2",
                 "Racah family (-1/2,1,0,0): moments 2^n R-_{n+1}/R-_1; "
                 "weight x(x+1) at argument x(x+1), normalizer 2 R-_1",
                 TheoremSpec{RacahParams{Rat(-1, 2), Rat(1), Rat(0), Rat(0)}, xx1, xx1, Rat(0),
                             Rat(2) * r_value(RSeqKind::Minus, 1), TargetSeq{RSeqKind::Minus, 1}}});
    v.push_back({"T3",
                 "Racah family (0,1/2,0,-2): moments 2^n R+_{n+1}/R+_1; "
                 "weight (x+1)(x+2) at argument (x+1)(x+2), normalizer 2 R+_1",
                 TheoremSpec{RacahParams{Rat(0), Rat(1, 2), Rat(0), Rat(-2)}, x1x2, x1x2, Rat(0),
                             Rat(2) * r_value(RSeqKind::Plus, 1), TargetSeq{RSeqKind::Plus, 1}}});
    v.push_back({"T4",
                 "Racah family (-1/2,2,1,-1): moments 2^n R+_{n+2}/R+_2; "
                 "weight ((x+1)(x+2))^2 at argument (x+1)(x+2), normalizer 4 R+_2",
                 TheoremSpec{RacahParams{Rat(-1, 2), Rat(2), Rat(1), Rat(-1)}, x1x2 * x1x2, x1x2,
                             Rat(0), Rat(4) * r_value(RSeqKind::Plus, 2),
                             TargetSeq{RSeqKind::Plus, 2}}});
    v.push_back({"T5",
                 "Racah family (2,1/2,2,0) with argument shifted by -2 "
                 "(since x(x+3) = (x+1)(x+2) - 2): moments 2^n R+_{n+3}/R+_3; "
                 "weight ((x+1)(x+2))^3, normalizer 8 R+_3",
                 TheoremSpec{RacahParams{Rat(2), Rat(1, 2), Rat(2), Rat(0)}, x1x2 * x1x2 * x1x2,
                             x1x2, Rat(-2), Rat(8) * r_value(RSeqKind::Plus, 3),
                             TargetSeq{RSeqKind::Plus, 3}}});
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    std::string key = id;
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (const auto& e : catalog())
        if (e.id == key) return e;
    throw std::out_of_range("unknown theorem id '" + id + "' (expected T1..T5)");
}

}  // namespace ramabern
