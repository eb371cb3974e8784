// Subgroups, subgroup enumeration, and coset/quotient services.
#pragma once

#include <vector>

#include "popsum/group_set.hpp"

namespace popsum {

// A closed subset containing 0.  Construction verifies closure, the identity,
// and Lagrange (order divides |G|).
struct Subgroup {
    GroupSet members;
    int order = 0;

    static Subgroup trivial(const FiniteAbelianGroup& g);
    static Subgroup whole(const FiniteAbelianGroup& g);
    // Throws std::invalid_argument if `members` is not a subgroup.
    static Subgroup from_set(GroupSet members);

    const FiniteAbelianGroup& group() const { return members.group(); }
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Smallest subgroup containing gens; empty gens yields {0}.
Subgroup subgroup_generated(const FiniteAbelianGroup& g, const std::vector<Element>& gens);
Subgroup subgroup_generated(const FiniteAbelianGroup& g, const GroupSet& gens);

// Every subgroup of G exactly once, sorted by (order, member bitmask).
// Breadth-first closure over one-generator extensions with bitmask dedup.
// Throws std::length_error if |G| exceeds the limit.
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, int order_limit = 4096);

// Dense coset ids for G/K, assigned in order of smallest coset representative.
class QuotientMap {
public:
    QuotientMap(const FiniteAbelianGroup& g, const Subgroup& k);

    int coset_count() const { return count_; }
    int operator()(Element g) const { return ids_[g]; }
    Element representative(int id) const { return reps_[id]; }
    // Coset arithmetic through representatives.
    int add_ids(int a, int b) const;

private:
    const FiniteAbelianGroup* group_;
    std::vector<int> ids_;
    std::vector<Element> reps_;
    int count_ = 0;
};

// Coset id of g in G/K (two elements share an id iff they differ by K).
int quotient_map(const FiniteAbelianGroup& g, const Subgroup& k, Element e);

}  // namespace popsum
