#include "popsum/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "popsum/theorems.hpp"

namespace popsum {

GroupSet canonical_subset(const GroupSet& base, const GroupSet& sub, const Subgroup& h) {
    return sumset(sub, h.members) & base;
}

namespace {

// Nonempty intersections of `s` with H-cosets, ordered by coset id.
std::vector<GroupSet> coset_slices(const GroupSet& s, const Subgroup& h) {
    const FiniteAbelianGroup& g = s.group();
    QuotientMap q(g, h);
    std::vector<GroupSet> slices(q.coset_count(), GroupSet(g));
    s.for_each([&](Element e) { slices[q(e)].add(e); });
    slices.erase(std::remove_if(slices.begin(), slices.end(),
                                [](const GroupSet& slice) { return slice.empty(); }),
                 slices.end());
    return slices;
}

struct Removal {
    GroupSet set;
    int size = 0;
};

// All unions of whole slices with total size <= budget (including the empty
// removal), via DFS over slice indices.
std::vector<Removal> slice_removals(const std::vector<GroupSet>& slices, int budget,
                                    const FiniteAbelianGroup& g) {
    std::vector<Removal> out;
    Removal cur{GroupSet(g), 0};
    std::vector<std::size_t> stack;
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        out.push_back(cur);
        for (std::size_t i = next; i < slices.size(); ++i) {
            if (cur.size + slices[i].size() > budget) continue;
            Removal saved = cur;
            cur.set = cur.set | slices[i];
            cur.size += slices[i].size();
            self(self, i + 1);
            cur = saved;
        }
    };
    dfs(dfs, 0);
    return out;
}

bool conclusion_holds(const GroupSet& a_prime, const GroupSet& b_prime, int t,
                      const GroupSet& target) {
    if (a_prime.empty() || b_prime.empty()) return target.empty();
    GroupSet plain = sumset(a_prime, b_prime);
    if (plain != target) return false;
    return popular_sumset(a_prime, b_prime, t) == plain;
}

// All subsets of `elems` with size <= budget, as removal sets.
std::vector<Removal> element_removals(const GroupSet& s, int budget) {
    std::vector<Element> elems = s.elements();
    std::vector<Removal> out;
    Removal cur{GroupSet(s.group()), 0};
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        out.push_back(cur);
        if (cur.size == budget) return;
        for (std::size_t i = next; i < elems.size(); ++i) {
            cur.set.add(elems[i]);
            ++cur.size;
            self(self, i + 1);
            cur.set.remove(elems[i]);
            --cur.size;
        }
    };
    dfs(dfs, 0);
    return out;
}

void sort_removals(std::vector<Removal>& removals) {
    std::sort(removals.begin(), removals.end(), [](const Removal& x, const Removal& y) {
        if (x.size != y.size) return x.size < y.size;
        return x.set.bits_less(y.set);
    });
}

}  // namespace

std::optional<std::pair<GroupSet, GroupSet>> search_conclusion_witness(const GroupSet& a,
                                                                       const GroupSet& b, int t) {
    require_same_group(a, b);
    GroupSet target = popular_sumset(a, b, t);
    if (target.empty()) return std::nullopt;
    Subgroup h = stabilizer(target);

    const int budget = t - 1;
    std::vector<Removal> rem_a = slice_removals(coset_slices(a, h), budget, a.group());
    std::vector<Removal> rem_b = slice_removals(coset_slices(b, h), budget, b.group());
    sort_removals(rem_a);
    sort_removals(rem_b);

    // Merge the two sorted removal lists into (ell, bitsA, bitsB) order.
    struct Cand {
        std::size_t ia, ib;
        int ell;
    };
    std::vector<Cand> cands;
    for (std::size_t ia = 0; ia < rem_a.size(); ++ia)
        for (std::size_t ib = 0; ib < rem_b.size(); ++ib)
            if (rem_a[ia].size + rem_b[ib].size <= budget)
                cands.push_back({ia, ib, rem_a[ia].size + rem_b[ib].size});
    std::stable_sort(cands.begin(), cands.end(), [&](const Cand& x, const Cand& y) {
        if (x.ell != y.ell) return x.ell < y.ell;
        int c = rem_a[x.ia].set.compare_bits(rem_a[y.ia].set);
        if (c != 0) return c < 0;
        return rem_b[x.ib].set.bits_less(rem_b[y.ib].set);
    });

    for (const Cand& c : cands) {
        GroupSet a_prime = a - rem_a[c.ia].set;
        GroupSet b_prime = b - rem_b[c.ib].set;
        if (conclusion_holds(a_prime, b_prime, t, target))
            return std::make_pair(std::move(a_prime), std::move(b_prime));
    }
    return std::nullopt;
}

bool witness_exists_exhaustive(const GroupSet& a, const GroupSet& b, int t) {
    require_same_group(a, b);
    GroupSet target = popular_sumset(a, b, t);
    const int budget = t - 1;
    std::vector<Removal> rem_a = element_removals(a, budget);
    std::vector<Removal> rem_b = element_removals(b, budget);
    for (const Removal& ra : rem_a) {
        for (const Removal& rb : rem_b) {
            if (ra.size + rb.size > budget) continue;
            if (conclusion_holds(a - ra.set, b - rb.set, t, target)) return true;
        }
    }
    return false;
}

WitnessReport validate_witness(const GroupSet& a, const GroupSet& b, int t,
                               const GroupSet& a_prime_in, const GroupSet& b_prime_in) {
    require_same_group(a, b);
    if (!a.contains(a_prime_in)) throw std::invalid_argument("A' must be a subset of A");
    if (!b.contains(b_prime_in)) throw std::invalid_argument("B' must be a subset of B");

    GroupSet target = popular_sumset(a, b, t);
    Subgroup h = stabilizer(target);
    GroupSet a_prime = canonical_subset(a, a_prime_in, h);
    GroupSet b_prime = canonical_subset(b, b_prime_in, h);

    WitnessReport r;
    r.group = a.group().spec();
    r.A = a.elements();
    r.B = b.elements();
    r.t = t;
    r.A_prime = a_prime.elements();
    r.B_prime = b_prime.elements();
    r.H = h.members.elements();
    r.ell = (a.size() - a_prime.size()) + (b.size() - b_prime.size());
    GroupSet a_sat = sumset(a_prime, h.members);
    GroupSet b_sat = sumset(b_prime, h.members);
    r.rho = (a_sat.size() - a_prime.size()) + (b_sat.size() - b_prime.size());
    r.popular_sum = popular_sum(a, b, t);

    const long long sum = r.popular_sum;
    const long long hh = h.order;
    const long long base = static_cast<long long>(t) * a.size() + static_cast<long long>(t) * b.size();
    const long long middle = base - static_cast<long long>(t) * t -
                             static_cast<long long>(t - r.ell) * (hh - r.rho - t);

    r.clauses.removal_bound = r.ell <= t - 1;
    if (a_prime.empty() || b_prime.empty()) {
        r.clauses.popular_eq = target.empty();
        r.clauses.target_eq = target.empty();
        r.clauses.small_sumset = false;
    } else {
        GroupSet plain = sumset(a_prime, b_prime);
        r.clauses.popular_eq = popular_sumset(a_prime, b_prime, t) == plain;
        r.clauses.target_eq = plain == target;
        r.clauses.small_sumset = plain.size() < a_prime.size() + b_prime.size() - t;
    }
    r.clauses.size_a = a_prime.size() >= t + 1;
    r.clauses.size_b = b_prime.size() >= t + 1;
    r.clauses.chain_first = sum >= middle;
    r.clauses.chain_second = middle >= base - static_cast<long long>(t) * hh;
    r.valid = r.clauses.removal_bound && r.clauses.popular_eq && r.clauses.target_eq;
    return r;
}

FindWitnessOutcome find_witness(const GroupSet& a, const GroupSet& b, int t) {
    require_same_group(a, b);
    if (t < 2) throw std::invalid_argument("witness search needs t >= 2");
    if (a.size() < t || b.size() < t)
        throw std::invalid_argument("witness search needs |A|, |B| >= t");
    RepProfile profile = rep_profile(a, b);
    long long sum = profile.popular_sum(t);
    long long bound = static_cast<long long>(t) * (a.size() + b.size()) + threshold_new(t);
    if (sum >= bound)
        throw std::invalid_argument("popular-sum hypothesis does not hold for this instance");
    if (popular_sumset(profile, a.group(), t).empty())
        throw std::invalid_argument("witness search needs a nonempty A +_t B");

    FindWitnessOutcome out;
    auto found = search_conclusion_witness(a, b, t);
    if (found) {
        out.witness = validate_witness(a, b, t, found->first, found->second);
        return out;
    }
    NoWitness cx;
    cx.group = a.group().spec();
    cx.A = a.elements();
    cx.B = b.elements();
    cx.t = t;
    cx.rep_counts = profile.counts;
    out.counterexample = std::move(cx);
    return out;
}

}  // namespace popsum
