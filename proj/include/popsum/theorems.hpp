// One checker per stated bound.  Every checker evaluates both sides of its
// inequality and returns a BoundReport; a bare boolean is never enough.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "popsum/witness.hpp"

namespace popsum {

enum class Verdict { holds, violated, hypothesis_not_met };

const char* verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& s);

struct BoundReport {
    std::string theorem;  // pollard | kneser | cd | hs | new | conjecture | restricted
    std::string group;
    std::vector<Element> A, B;
    int t = 1;
    double lhs = 0;
    double rhs = 0;
    bool real_valued = false;  // rhs is a genuine real, not an integer
    Verdict verdict = Verdict::hypothesis_not_met;
    std::string anchor;
    std::vector<Element> H;  // subgroup entering the bound, when one does
    std::optional<WitnessReport> witness;
    nlohmann::json detail;  // checker-specific extras

    bool operator==(const BoundReport&) const = default;
};

// ceil(-(4/3)t^2 + (2/3)t) in exact integer arithmetic; throws for t < 2.
long long threshold_new(long long t);

bool is_prime(int n);

// sum_{i<=t} |A+_iB| >= min(tp, t|A|+t|B|-t^2) over Z_p.  Throws on a
// non-prime or non-cyclic ambient group.
BoundReport check_pollard(const GroupSet& a, const GroupSet& b, int t);

// |A+B| >= |A+H| + |B+H| - |H| with H = H(A+B).
BoundReport check_kneser(const GroupSet& a, const GroupSet& b);

// |A+B| >= min(p, |A|+|B|-1) over Z_p.
BoundReport check_cauchy_davenport(const GroupSet& a, const GroupSet& b);

// Largest subgroup H (ties: smallest member bitmask) with g+H inside S for
// some g, plus the smallest such witness g.  The overload taking a
// pre-enumerated subgroup list (as returned by enumerate_subgroups) lets hot
// scan loops skip the lattice recomputation.
std::pair<Subgroup, Element> max_coset_subgroup(const GroupSet& s);
std::pair<Subgroup, Element> max_coset_subgroup(const GroupSet& s,
                                                const std::vector<Subgroup>& subgroups);

// sum_{i<=t} |A+_iB| >= t|A|+t|B|-t^2-|H|^2/4, H from max_coset_subgroup(A+B).
// The verdict is decided by cross-multiplied integer comparison.
BoundReport check_hamidoune_serra(const GroupSet& a, const GroupSet& b, int t);
BoundReport check_hamidoune_serra(const GroupSet& a, const GroupSet& b, int t,
                                  const std::vector<Subgroup>& subgroups);

// The structural popular-sumset bound: under the popular-sum hypothesis a
// witness (A', B') must exist and satisfy every conclusion clause.  When no
// witness is passed in, the canonical search supplies one.
BoundReport check_theorem_new(const GroupSet& a, const GroupSet& b, int t,
                              std::optional<WitnessReport> witness = std::nullopt);

struct MainPropItem {
    int item = 0;
    bool applicable = true;
    bool holds = false;
    std::string note;
};

struct MainPropReport {
    std::string group;
    std::vector<Element> A, B;
    std::vector<Element> A2, B2;  // the saturated pair (A'', B'')
    std::vector<Element> H;
    int t = 0;
    double alpha = 0;
    int ell = 0;
    int rho = 0;
    Verdict verdict = Verdict::hypothesis_not_met;
    std::vector<MainPropItem> items;
};

// Items 1-6 for the saturated pair A'' = (A'+H) & A, B'' = (B'+H) & B.
// Item 6 is only checked when ell = t-1.  alpha = 0 keeps every comparison in
// integers; other alphas use long double with a 1e-9 guard.
MainPropReport check_mainprop_items(const GroupSet& a, const GroupSet& b, int t,
                                    const GroupSet& a_prime, const GroupSet& b_prime,
                                    double alpha);

struct ConjectureParams {
    int t = 0;
    int h = 0;  // |H|, H = stabilizer of A +_t B
    int s = 0;
    int u = 0;  // t = s*h + u with u in [1, h]
    long long rhs = 0;
};

ConjectureParams conjecture_params(const GroupSet& a, const GroupSet& b, int t);

// sum_{i<=t} |A+_iB| >= t|A|+t|B|-t^2-u(|H|-u).  A supplied u-witness adds the
// speculative strengthened bound and the structural clauses to the detail;
// their verdicts are reported separately and never flip the main verdict.
BoundReport check_conjecture(const GroupSet& a, const GroupSet& b, int t,
                             std::optional<std::pair<GroupSet, GroupSet>> witness = std::nullopt);

}  // namespace popsum
