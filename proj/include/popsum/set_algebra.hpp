// Set-level arithmetic: sumsets, representation profiles, popular sumsets,
// stabilizers, the Dyson transform, dot-grid statistics, and the T/Omega
// invariant.  All operations are pure functions over immutable inputs.
#pragma once

#include <cstdint>

#include "popsum/subgroup.hpp"

namespace popsum {

// counts[g] = r_{A,B}(g), the number of (a,b) in A x B with a+b = g.
struct RepProfile {
    std::vector<int> counts;

    // Sum of min(counts[g], t) over all g; the popular sum for threshold t.
    long long popular_sum(int t) const;
    long long total() const;  // equals |A| * |B|
};

// {a + b : a in A, b in B}.
GroupSet sumset(const GroupSet& a, const GroupSet& b);

// Computed as counts[g] = |(g - A) & B| via translated-bitset popcounts.
RepProfile rep_profile(const GroupSet& a, const GroupSet& b);

// {g : r_{A,B}(g) >= t}; t = 1 gives the plain sumset.
GroupSet popular_sumset(const GroupSet& a, const GroupSet& b, int t);
GroupSet popular_sumset(const RepProfile& profile, const FiniteAbelianGroup& g, int t);

// Sum_{i=1..t} |A +_i B|, computed in one profile pass.
long long popular_sum(const GroupSet& a, const GroupSet& b, int t);

// H(A) = {e : e + A = A}.  By the set-builder definition H(empty) = G.
// Candidates are restricted to e with e + a0 in A for a fixed a0 in A.
Subgroup stabilizer(const GroupSet& a);

// Dyson transform A(z) = A | (z + B), B(z) = A & (z + B).
// `in_difference` is false iff z is outside A - B (second component empty).
struct DysonPair {
    GroupSet a;
    GroupSet b;
    bool in_difference;
};
DysonPair dyson(const GroupSet& a, const GroupSet& b, Element z);

// Dot-grid statistics for threshold t:
//   X = A +_{t+1} B,
//   hole_count y = |X||B| - sum_{x in X} r(x),
//   edge_count |E| = #{(a,b) : a + b not in X},
// tied to the popular sum by
//   sum = |A||B| - |X|(|B| - t) + y  and  sum = t|X| + |E|.
struct DotGridStats {
    GroupSet x;
    long long hole_count = 0;
    long long edge_count = 0;
    long long popular_sum = 0;
};
DotGridStats dot_grid_stats(const GroupSet& a, const GroupSet& b, int t);

// T = {x in A : x + B subset of A} and Omega = H(T + B) ({0} when T is
// empty).  When 0 lies in B (the frame the T/Omega machinery is used in),
// a nonempty T is Omega-periodic with H(T) = Omega, and this is asserted.
struct TOmega {
    GroupSet t;
    Subgroup omega;
};
TOmega invariant_T(const GroupSet& a, const GroupSet& b);

}  // namespace popsum
