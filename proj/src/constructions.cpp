#include "popsum/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace popsum {

namespace {

void require_subgroup_of(const FiniteAbelianGroup& g, const Subgroup& h) {
    if (h.group() != g) throw std::invalid_argument("subgroup belongs to a different group");
}

// Generator of the largest cyclic factor; the default progression difference.
Element default_difference(const FiniteAbelianGroup& g) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < g.moduli().size(); ++j)
        if (g.moduli()[j] > g.moduli()[arg]) arg = j;
    std::vector<int> comps(g.moduli().size(), 0);
    comps[arg] = g.moduli()[arg] > 1 ? 1 : 0;
    return g.from_components(comps);
}

// Difference candidates in deterministic order: the default first, then all
// elements by index.
std::vector<Element> difference_candidates(const FiniteAbelianGroup& g) {
    std::vector<Element> out;
    Element d0 = default_difference(g);
    out.push_back(d0);
    for (Element e = 0; e < g.order(); ++e)
        if (e != d0) out.push_back(e);
    return out;
}

// Union of cosets i*d + H for i in [0, count); nullopt if they collide.
std::optional<GroupSet> coset_progression(const FiniteAbelianGroup& g, const Subgroup& h,
                                          Element d, int count) {
    GroupSet out(g);
    Element rep = 0;
    for (int i = 0; i < count; ++i) {
        if (out.test(rep)) return std::nullopt;  // wrapped onto an earlier coset
        out = out | h.members.translated(rep);
        rep = g.add(rep, d);
    }
    return out;
}

ConstructionResult base_result(const char* family, const FiniteAbelianGroup& g,
                               const Subgroup& h) {
    ConstructionResult r;
    r.family = family;
    r.group = g.spec();
    r.H = h.members.elements();
    return r;
}

void finish(ConstructionResult& r, const GroupSet& a, const GroupSet& b) {
    r.A = a.elements();
    r.B = b.elements();
    r.direct_sum = popular_sum(a, b, r.t);
    r.matches = r.direct_sum == r.predicted_sum;
}

}  // namespace

ConstructionResult gen_minus_self(const FiniteAbelianGroup& g, const Subgroup& h, int s, int u) {
    require_subgroup_of(g, h);
    const int hh = h.order;
    if (s < 1) throw std::invalid_argument("minus_self needs s >= 1");
    if (u < 1 || u >= hh) throw std::invalid_argument("minus_self needs u in [1, |H|-1]");
    if (g.order() / hh < s + 1)
        throw std::invalid_argument("group does not admit s+1 distinct H-cosets");

    auto stabilizers_match = [&](const GroupSet& a) {
        if (!(stabilizer(a) == h)) return false;
        return stabilizer(sumset(a, a.negated())) == h;
    };

    std::optional<GroupSet> chosen;
    for (Element d : difference_candidates(g)) {
        auto a = coset_progression(g, h, d, s + 1);
        if (a && stabilizers_match(*a)) {
            chosen = std::move(a);
            break;
        }
    }
    if (!chosen) {
        // Progressions failed; enumerate coset-id patterns containing coset 0.
        QuotientMap q(g, h);
        std::vector<int> ids(s);  // ids beyond coset 0, increasing
        auto build = [&](const std::vector<int>& extra) {
            GroupSet a = h.members;
            for (int id : extra) a = a | h.members.translated(q.representative(id));
            return a;
        };
        std::vector<int> pick;
        auto dfs = [&](auto&& self, int next) -> bool {
            if (static_cast<int>(pick.size()) == s) {
                GroupSet a = build(pick);
                if (stabilizers_match(a)) {
                    chosen = std::move(a);
                    return true;
                }
                return false;
            }
            for (int id = next; id < q.coset_count(); ++id) {
                pick.push_back(id);
                if (self(self, id + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        dfs(dfs, 1);
    }
    if (!chosen)
        throw std::invalid_argument("no union of s+1 H-cosets has stabilizer exactly H");

    ConstructionResult r = base_result("minus_self", g, h);
    r.s = s;
    r.u = u;
    r.t = s * hh + u;
    GroupSet a = *chosen;
    GroupSet b = a.negated();
    long long asz = a.size();
    r.predicted_sum = asz * asz - static_cast<long long>(hh - u) * hh;
    r.printed_alternative = static_cast<long long>(r.t) * (asz + b.size()) -
                            static_cast<long long>(u) * (hh - u);
    r.note =
        "the t|A|+t|B|-u(|H|-u) closed form overshoots the verified |A|^2-(|H|-u)|H| "
        "value by exactly t^2; the consistent form is t|A|+t|B|-t^2-u(|H|-u)";
    finish(r, a, b);
    return r;
}

namespace {

// Shared placement for the two progression families: A and B as APs of
// H-cosets with a common difference, no wraparound, H(A+B) = H exactly.
std::pair<GroupSet, GroupSet> place_progressions(const FiniteAbelianGroup& g, const Subgroup& h,
                                                 int n_a, int n_b) {
    for (Element d : difference_candidates(g)) {
        auto span = coset_progression(g, h, d, n_a + n_b - 1);
        if (!span) continue;
        GroupSet a = *coset_progression(g, h, d, n_a);
        GroupSet b = *coset_progression(g, h, d, n_b);
        if (!(stabilizer(*span) == h)) continue;  // span = A+B for APs
        return {std::move(a), std::move(b)};
    }
    throw std::invalid_argument("no coset progression of the requested shape exists");
}

}  // namespace

ConstructionResult gen_kneser_pair(const FiniteAbelianGroup& g, const Subgroup& h, int t, int n_a,
                                   int n_b) {
    require_subgroup_of(g, h);
    if (t < 1) throw std::invalid_argument("kneser_pair needs t >= 1");
    if (h.order <= t) throw std::invalid_argument("kneser_pair needs |H| > t");
    if (n_a < 1 || n_b < 1) throw std::invalid_argument("kneser_pair needs nA, nB >= 1");
    if (g.order() / h.order < n_a + n_b - 1)
        throw std::invalid_argument("group does not admit nA+nB-1 distinct H-cosets");

    auto [a, b] = place_progressions(g, h, n_a, n_b);
    GroupSet plain = sumset(a, b);
    if (plain.size() >= a.size() + b.size() - 1)
        throw std::invalid_argument("placement is not Kneser-critical");

    ConstructionResult r = base_result("kneser_pair", g, h);
    r.t = t;
    r.nA = n_a;
    r.nB = n_b;
    r.predicted_sum = static_cast<long long>(t) * (a.size() + b.size()) -
                      static_cast<long long>(t) * h.order;
    finish(r, a, b);
    return r;
}

ConstructionResult gen_ap_cosets(const FiniteAbelianGroup& g, const Subgroup& h, int s, int u,
                                 int n_a, int n_b) {
    require_subgroup_of(g, h);
    const long long hh = h.order;
    if (s < 0) throw std::invalid_argument("ap_cosets needs s >= 0");
    if (u < 1 || u >= hh) throw std::invalid_argument("ap_cosets needs u in [1, |H|-1]");
    if (n_a < s + 1 || n_b < s + 1) throw std::invalid_argument("ap_cosets needs nA, nB >= s+1");
    if (g.order() / hh < n_a + n_b - 1)
        throw std::invalid_argument("group does not admit nA+nB-1 distinct H-cosets");

    auto [a, b] = place_progressions(g, h, n_a, n_b);

    ConstructionResult r = base_result("ap_cosets", g, h);
    r.s = s;
    r.u = u;
    r.t = static_cast<int>(s * hh) + u;
    r.nA = n_a;
    r.nB = n_b;
    const long long tt = r.t;
    const long long sizes = a.size() + b.size();
    r.predicted_sum = tt * sizes - tt * tt - static_cast<long long>(u) * (hh - u);
    long long expanded = tt * sizes - (2 * s + 1) * tt * hh + static_cast<long long>(s) * (s + 1) * hh * hh;
    if (expanded != r.predicted_sum)
        throw std::logic_error("ap_cosets closed forms disagree");
    finish(r, a, b);
    return r;
}

ConstructionResult gen_recursive_1(const FiniteAbelianGroup& g, const Subgroup& k, int s, int u,
                                   const GroupSet& a0, const GroupSet& b0) {
    require_subgroup_of(g, k);
    ConstructionResult base = gen_minus_self(g, k, s, u);
    GroupSet a = GroupSet::from_elements(g, base.A);
    GroupSet b = GroupSet::from_elements(g, base.B);
    // The generated base always contains coset 0, so K <= A & B already.
    if (!k.members.contains(a0) || !k.members.contains(b0))
        throw std::invalid_argument("inner sets must live inside K");
    if (a0.size() < u || b0.size() < u)
        throw std::invalid_argument("inner sets need |A0|, |B0| >= u");
    long long inner_sum = popular_sum(a0, b0, u);
    if (inner_sum >= static_cast<long long>(u) * (a0.size() + b0.size()) -
                         static_cast<long long>(u) * u)
        throw std::invalid_argument("inner pair misses its popular-sum precondition");

    GroupSet a_star = (a - k.members) | a0;
    GroupSet b_star = (b - k.members) | b0;

    ConstructionResult r = base_result("recursive_1", g, k);
    r.s = s;
    r.u = u;
    r.t = base.t;
    r.A0 = a0.elements();
    r.B0 = b0.elements();
    r.predicted_sum = static_cast<long long>(a_star.size()) * b_star.size() -
                      static_cast<long long>(a0.size()) * b0.size() + inner_sum;
    const long long tt = r.t;
    if (r.predicted_sum >= tt * (a_star.size() + b_star.size()) - tt * tt)
        throw std::logic_error("recursive_1 prediction is not below the target threshold");
    finish(r, a_star, b_star);
    return r;
}

ConstructionResult gen_recursive_2(const GroupSet& base_a, const GroupSet& base_b,
                                   const Subgroup& k, int t, const GroupSet& a0,
                                   const GroupSet& b0) {
    const FiniteAbelianGroup& g = base_a.group();
    require_same_group(base_a, base_b);
    require_subgroup_of(g, k);
    if (t < 1) throw std::invalid_argument("recursive_2 needs t >= 1");
    if (k.order <= t) throw std::invalid_argument("recursive_2 needs |K| > t");
    if (!(stabilizer(base_a) == k) || !(stabilizer(base_b) == k))
        throw std::invalid_argument("base pair must have H(A) = H(B) = K");
    GroupSet plain = sumset(base_a, base_b);
    if (!(stabilizer(plain) == k)) throw std::invalid_argument("base pair needs H(A+B) = K");
    if (plain.size() >= base_a.size() + base_b.size() - 1)
        throw std::invalid_argument("base pair is not Kneser-critical");

    // Exactly one coset of A+B may have a single representation mod K.
    QuotientMap q(g, k);
    std::vector<int> quot_counts(q.coset_count(), 0);
    base_a.for_each([&](Element x) {
        base_b.for_each([&](Element y) { ++quot_counts[q(g.add(x, y))]; });
    });
    const long long kk = k.order;
    int unique_id = -1;
    int uniques = 0;
    for (int id = 0; id < q.coset_count(); ++id) {
        if (quot_counts[id] == static_cast<long long>(kk) * kk) {  // one coset pair
            ++uniques;
            unique_id = id;
        }
    }
    if (uniques != 1)
        throw std::invalid_argument("base pair lacks a unique expression coset mod K");

    // Translate the unique expression coset to 0 with K inside A & B.
    Element ua = -1, ub = -1;
    base_a.for_each([&](Element x) {
        if (ua >= 0) return;
        base_b.for_each([&](Element y) {
            if (ub >= 0) return;
            if (q(g.add(x, y)) == unique_id) {
                ua = x;
                ub = y;
            }
        });
    });
    GroupSet a = base_a.translated(g.neg(ua));
    GroupSet b = base_b.translated(g.neg(ub));

    if (a0.group() != g || !k.members.contains(a0) || !k.members.contains(b0))
        throw std::invalid_argument("inner sets must live inside K");
    if (a0.size() < t || b0.size() < t)
        throw std::invalid_argument("inner sets need |A0|, |B0| >= t");
    long long inner_sum = popular_sum(a0, b0, t);
    const long long tt = t;
    if (inner_sum >= tt * (a0.size() + b0.size()) - tt * tt)
        throw std::invalid_argument("inner pair misses its popular-sum precondition");

    GroupSet a_star = (a - k.members) | a0;
    GroupSet b_star = (b - k.members) | b0;

    ConstructionResult r = base_result("recursive_2", g, k);
    r.t = t;
    r.A0 = a0.elements();
    r.B0 = b0.elements();
    r.predicted_sum = tt * (a_star.size() - a0.size()) + tt * (b_star.size() - b0.size()) +
                      inner_sum;
    if (r.predicted_sum >= tt * (a_star.size() + b_star.size()) - tt * tt)
        throw std::logic_error("recursive_2 prediction is not below the target threshold");
    finish(r, a_star, b_star);
    return r;
}

std::optional<std::pair<GroupSet, GroupSet>> find_inner_pair(const FiniteAbelianGroup& g,
                                                             const Subgroup& k, int u,
                                                             int min_size) {
    require_subgroup_of(g, k);
    if (u < 1) throw std::invalid_argument("find_inner_pair needs u >= 1");
    std::vector<Element> elems = k.members.elements();
    const int kk = static_cast<int>(elems.size());
    if (kk > 10) throw std::length_error("subgroup too large for exhaustive inner search");
    const int lo = std::max(u, min_size);

    std::vector<GroupSet> subsets;
    for (std::uint32_t mask = 0; mask < (1u << kk); ++mask) {
        if (std::popcount(mask) < lo) continue;
        GroupSet s(g);
        for (int i = 0; i < kk; ++i)
            if (mask >> i & 1) s.add(elems[i]);
        subsets.push_back(std::move(s));
    }

    struct Pair {
        std::size_t i, j;
        int total;
    };
    std::vector<Pair> pairs;
    pairs.reserve(subsets.size() * subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = 0; j < subsets.size(); ++j)
            pairs.push_back({i, j, subsets[i].size() + subsets[j].size()});
    std::sort(pairs.begin(), pairs.end(), [&](const Pair& x, const Pair& y) {
        if (x.total != y.total) return x.total < y.total;
        int c = subsets[x.i].compare_bits(subsets[y.i]);
        if (c != 0) return c < 0;
        return subsets[x.j].bits_less(subsets[y.j]);
    });

    const long long uu = u;
    for (const Pair& p : pairs) {
        const GroupSet& a0 = subsets[p.i];
        const GroupSet& b0 = subsets[p.j];
        long long inner = popular_sum(a0, b0, u);
        if (inner < uu * (a0.size() + b0.size()) - uu * uu) return std::make_pair(a0, b0);
    }
    return std::nullopt;
}

}  // namespace popsum
