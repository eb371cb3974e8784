// Generators for the extremal families: coset unions with A = -B, Kneser-
// critical coset progressions, coset progressions tuned to t = s|H|+u, and
// the two recursive composition processes.  Every generator returns the
// instance together with its predicted popular sum and the directly computed
// value, so callers can confirm the closed forms against the profile oracle.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "popsum/set_algebra.hpp"

namespace popsum {

struct ConstructionResult {
    std::string family;  // minus_self | kneser_pair | ap_cosets | recursive_1 | recursive_2
    std::string group;
    std::vector<Element> H;  // the subgroup (K for the recursive families)
    int s = 0;
    int u = 0;
    int t = 0;
    int nA = 0;
    int nB = 0;
    std::vector<Element> A0, B0;  // inner sets of the recursive families
    std::vector<Element> A, B;
    long long predicted_sum = 0;
    long long direct_sum = 0;
    bool matches = false;
    // The refuted closed form t|A|+t|B|-u(|H|-u) for minus_self, which
    // overshoots by exactly t^2; kept so reports can show the discrepancy.
    std::optional<long long> printed_alternative;
    std::string note;

    bool operator==(const ConstructionResult&) const = default;
};

// A = union of s+1 H-cosets with stabilizer exactly H (consecutive multiples
// of a maximal-order element by default, other patterns retried), B = -A,
// t = s|H|+u.  Predicted sum |A|^2 - (|H|-u)|H|.
ConstructionResult gen_minus_self(const FiniteAbelianGroup& g, const Subgroup& h, int s, int u);

// A, B arithmetic progressions of nA and nB H-cosets without wraparound,
// |H| > t.  Predicted sum t|A|+t|B|-t|H|.
ConstructionResult gen_kneser_pair(const FiniteAbelianGroup& g, const Subgroup& h, int t, int n_a,
                                   int n_b);

// Coset progressions with t = s|H|+u, nA,nB >= s+1.  Predicted sum
// t|A|+t|B|-t^2-u(|H|-u), cross-checked against the expanded form
// t|A|+t|B|-(2s+1)t|H|+s(s+1)|H|^2.
ConstructionResult gen_ap_cosets(const FiniteAbelianGroup& g, const Subgroup& h, int s, int u,
                                 int n_a, int n_b);

// Composite pair from the minus_self base over K: A* = (A\K) | A0,
// B* = (B\K) | B0 with A0,B0 inside K, |A0|,|B0| >= u and the inner pair
// under its popular-sum precondition at u.
ConstructionResult gen_recursive_1(const FiniteAbelianGroup& g, const Subgroup& k, int s, int u,
                                   const GroupSet& a0, const GroupSet& b0);

// Composite pair from a Kneser-critical base (A, B) with K = H(A) = H(B) =
// H(A+B), |K| > t, and a unique expression coset (verified: exactly one
// quotient element with a single representation).  The base is translated so
// that coset is K itself before splicing in A0, B0.
ConstructionResult gen_recursive_2(const GroupSet& base_a, const GroupSet& base_b,
                                   const Subgroup& k, int t, const GroupSet& a0,
                                   const GroupSet& b0);

// Exhaustive inner-pair search inside K: the first (A0, B0) by
// (|A0|+|B0|, bitmasks) with |A0|,|B0| >= max(u, min_size) satisfying
// sum_{i<=u} |A0+_iB0| < u|A0|+u|B0|-u^2.
std::optional<std::pair<GroupSet, GroupSet>> find_inner_pair(const FiniteAbelianGroup& g,
                                                             const Subgroup& k, int u,
                                                             int min_size = 0);

}  // namespace popsum
