#pragma once

#include "ramabern/moments.hpp"

#include <string>
#include <vector>

namespace ramabern {

/// One frozen orthogonality statement, keyed T1..T5.
struct CatalogEntry {
    std::string id;
    std::string description;
    TheoremSpec spec;
};

/// The five statements binding Racah parameter sets to the
/// quadratic-binomial moment sequences.
const std::vector<CatalogEntry>& catalog();

/// Lookup by id ("T1".."T5", case-insensitive). Throws std::out_of_range.
const CatalogEntry& catalog_entry(const std::string& id);

}  // namespace ramabern
