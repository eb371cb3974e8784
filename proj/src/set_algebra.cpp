#include "popsum/set_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace popsum {

long long RepProfile::popular_sum(int t) const {
    long long s = 0;
    for (int c : counts) s += std::min(c, t);
    return s;
}

long long RepProfile::total() const {
    long long s = 0;
    for (int c : counts) s += c;
    return s;
}

GroupSet sumset(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    GroupSet out(a.group());
    if (a.empty() || b.empty()) return out;
    // Union of |A| translates of B, smaller set outside.
    const GroupSet& outer = a.size() <= b.size() ? a : b;
    const GroupSet& inner = a.size() <= b.size() ? b : a;
    outer.for_each([&](Element e) { out = out | inner.translated(e); });
    return out;
}

RepProfile rep_profile(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    const int n = a.universe();
    RepProfile p;
    p.counts.assign(n, 0);
    if (a.empty() || b.empty()) return p;
    GroupSet neg_a = a.negated();
    for (Element g = 0; g < n; ++g) p.counts[g] = neg_a.translated(g).intersection_size(b);
    return p;
}

GroupSet popular_sumset(const RepProfile& profile, const FiniteAbelianGroup& g, int t) {
    if (t < 1) throw std::invalid_argument("popularity threshold must be >= 1");
    GroupSet out(g);
    for (Element e = 0; e < g.order(); ++e)
        if (profile.counts[e] >= t) out.add(e);
    return out;
}

GroupSet popular_sumset(const GroupSet& a, const GroupSet& b, int t) {
    if (t < 1) throw std::invalid_argument("popularity threshold must be >= 1");
    return popular_sumset(rep_profile(a, b), a.group(), t);
}

long long popular_sum(const GroupSet& a, const GroupSet& b, int t) {
    if (t < 1) throw std::invalid_argument("popularity threshold must be >= 1");
    return rep_profile(a, b).popular_sum(t);
}

Subgroup stabilizer(const GroupSet& a) {
    const FiniteAbelianGroup& g = a.group();
    if (a.empty()) return Subgroup::whole(g);
    GroupSet members(g);
    Element a0 = a.first();
    // e + A = A forces e + a0 in A, so e ranges over A - a0 only.
    a.for_each([&](Element x) {
        Element e = g.sub(x, a0);
        if (a.translated(e) == a) members.add(e);
    });
    return Subgroup{members, members.size()};
}

DysonPair dyson(const GroupSet& a, const GroupSet& b, Element z) {
    require_same_group(a, b);
    GroupSet zb = b.translated(z);
    GroupSet inter = a & zb;
    return DysonPair{a | zb, inter, !inter.empty()};
}

DotGridStats dot_grid_stats(const GroupSet& a, const GroupSet& b, int t) {
    require_same_group(a, b);
    if (t < 1) throw std::invalid_argument("popularity threshold must be >= 1");
    if (b.size() < t) throw std::invalid_argument("dot grid needs |B| >= t");
    RepProfile p = rep_profile(a, b);
    DotGridStats stats;
    stats.x = popular_sumset(p, a.group(), t + 1);
    long long reps_in_x = 0;
    stats.x.for_each([&](Element e) { reps_in_x += p.counts[e]; });
    stats.hole_count = static_cast<long long>(stats.x.size()) * b.size() - reps_in_x;
    stats.edge_count = p.total() - reps_in_x;
    stats.popular_sum = p.popular_sum(t);
    return stats;
}

TOmega invariant_T(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    if (b.empty()) throw std::invalid_argument("invariant_T needs nonempty B");
    const FiniteAbelianGroup& g = a.group();
    GroupSet t(g);
    a.for_each([&](Element x) {
        if (a.contains(b.translated(x))) t.add(x);
    });
    if (t.empty()) return TOmega{t, Subgroup::trivial(g)};
    Subgroup omega = stabilizer(sumset(t, b));
    // H(T+B) = H(T) needs T+Omega inside A, which 0 in B guarantees; without
    // that normalization the identity can fail (Z4, A={0,1,2}, B={1,3}).
    if (b.test(0) && !(stabilizer(t) == omega))
        throw std::logic_error("H(T+B) and H(T) disagree on nonempty T with 0 in B");
    return TOmega{t, omega};
}

}  // namespace popsum
