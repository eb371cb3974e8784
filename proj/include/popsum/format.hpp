// Text grammar for the CLI and report plumbing: group specs `Z<n>(xZ<n>)*`,
// set literals `{0,1,4}` / hex bitmasks `0x33`, and tau pair lists.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "popsum/group_set.hpp"

namespace popsum {

// "Z12" or "Z4xZ2" (case-insensitive separator); throws on anything else.
FiniteAbelianGroup parse_group(const std::string& spec);

// Range sugar for scan jobs: "Z2..Z10" expands to Z2,...,Z10; plain specs and
// comma lists pass through.
std::vector<std::string> expand_group_list(const std::string& arg);

// `{0,1,4}` with flat indices or `(a,b)` component tuples, or a hex bitmask
// `0x33` (bit g set <=> element g in the set).
GroupSet parse_set(const FiniteAbelianGroup& g, const std::string& literal);

std::string format_set(const std::vector<Element>& elems);

// "a:b,c:d" pair list; "identity" maps every a to itself.
std::vector<std::pair<Element, Element>> parse_tau_pairs(const std::string& literal);

}  // namespace popsum
