// Structural witnesses (A', B'): subsets with at most t-1 elements removed
// realizing A' +_t B' = A' + B' = A +_t B, together with per-clause
// verification of every conclusion attached to them.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "popsum/set_algebra.hpp"

namespace popsum {

struct WitnessClauses {
    bool removal_bound = false;  // |A\A'| + |B\B'| <= t-1
    bool popular_eq = false;     // A' +_t B' = A' + B'
    bool target_eq = false;      // A' + B' = A +_t B
    bool size_a = false;         // |A'| >= t+1
    bool size_b = false;         // |B'| >= t+1
    bool small_sumset = false;   // |A'+B'| < |A'| + |B'| - t
    bool chain_first = false;    // sum >= t|A|+t|B|-t^2-(t-l)(|H|-rho-t)
    bool chain_second = false;   // that bound >= t|A|+t|B|-t|H|

    bool all() const {
        return removal_bound && popular_eq && target_eq && size_a && size_b && small_sumset &&
               chain_first && chain_second;
    }

    bool operator==(const WitnessClauses&) const = default;
};

struct WitnessReport {
    std::string group;
    std::vector<Element> A, B;
    int t = 0;
    std::vector<Element> A_prime, B_prime;
    std::vector<Element> H;  // stabilizer of A +_t B
    int ell = 0;             // |A\A'| + |B\B'|
    int rho = 0;             // |(A'+H)\A'| + |(B'+H)\B'|
    long long popular_sum = 0;
    WitnessClauses clauses;
    bool valid = false;  // removal_bound && popular_eq && target_eq

    bool operator==(const WitnessReport&) const = default;
};

// Serialized counterexample: enough to re-derive every verdict externally.
struct NoWitness {
    std::string group;
    std::vector<Element> A, B;
    int t = 0;
    std::vector<int> rep_counts;  // full representation profile of (A, B)
};

struct FindWitnessOutcome {
    std::optional<WitnessReport> witness;
    std::optional<NoWitness> counterexample;
};

// (sub + H) & base; the canonical form of a witness component.
GroupSet canonical_subset(const GroupSet& base, const GroupSet& sub, const Subgroup& h);

// Deterministic canonical search.  Candidates are A and B minus unions of
// whole H-coset slices (H = stabilizer of A +_t B), enumerated by increasing
// total removal then by removal bitmasks; partial-slice removals need not be
// tried because canonicalization maps them back onto these candidates with a
// smaller removal count.  Returns the first pair satisfying the sumset
// equalities, or nullopt.
std::optional<std::pair<GroupSet, GroupSet>> search_conclusion_witness(const GroupSet& a,
                                                                       const GroupSet& b, int t);

// Plain exhaustive search over all element removals with total <= t-1,
// testing each candidate pair as-is.  This is the oracle route: it makes no
// use of the canonicalization argument, so it is also valid on threshold
// instances where that argument is unavailable.
bool witness_exists_exhaustive(const GroupSet& a, const GroupSet& b, int t);

// Canonicalizes (A', B') and evaluates every clause verdict independently;
// never short-circuits.  Throws if A' is not a subset of A (or B' of B).
WitnessReport validate_witness(const GroupSet& a, const GroupSet& b, int t, const GroupSet& a_prime,
                               const GroupSet& b_prime);

// Requires t >= 2, |A|,|B| >= t, the popular-sum hypothesis, and a nonempty
// A +_t B (throws std::invalid_argument otherwise).  Returns either a valid
// canonical witness or a fully serialized counterexample.
FindWitnessOutcome find_witness(const GroupSet& a, const GroupSet& b, int t);

}  // namespace popsum
