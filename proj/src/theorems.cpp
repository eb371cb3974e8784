#include "popsum/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace popsum {

namespace {

constexpr const char* kAnchorPollard = "Pollard popular-sum bound over Z_p";
constexpr const char* kAnchorKneser = "Kneser sumset-stabilizer bound";
constexpr const char* kAnchorCd = "Cauchy-Davenport bound over Z_p";
constexpr const char* kAnchorHs = "Hamidoune-Serra popular-sum bound";
constexpr const char* kAnchorNew = "popular-sumset structure bound";
constexpr const char* kAnchorConjecture = "Kneser-Pollard popular-sum conjecture";

long long ceil_div(long long num, long long den) {
    long long q = num / den;
    if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
    return q;
}

BoundReport base_report(const char* theorem, const char* anchor, const GroupSet& a,
                        const GroupSet& b, int t) {
    BoundReport r;
    r.theorem = theorem;
    r.anchor = anchor;
    r.group = a.group().spec();
    r.A = a.elements();
    r.B = b.elements();
    r.t = t;
    return r;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

Verdict verdict_from_name(const std::string& s) {
    if (s == "holds") return Verdict::holds;
    if (s == "violated") return Verdict::violated;
    if (s == "hypothesis-not-met") return Verdict::hypothesis_not_met;
    throw std::invalid_argument("unknown verdict: " + s);
}

long long threshold_new(long long t) {
    if (t < 2) throw std::invalid_argument("threshold is defined for t >= 2");
    return ceil_div(-4 * t * t + 2 * t, 3);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

BoundReport check_pollard(const GroupSet& a, const GroupSet& b, int t) {
    require_same_group(a, b);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const FiniteAbelianGroup& g = a.group();
    if (!g.is_presented_cyclic() || !is_prime(g.order()))
        throw std::invalid_argument("ambient group must be Z_p with p prime");

    BoundReport r = base_report("pollard", kAnchorPollard, a, b, t);
    const long long p = g.order();
    if (a.size() < t || b.size() < t) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    long long lhs = popular_sum(a, b, t);
    long long rhs = std::min(static_cast<long long>(t) * p,
                             static_cast<long long>(t) * (a.size() + b.size()) -
                                 static_cast<long long>(t) * t);
    r.lhs = static_cast<double>(lhs);
    r.rhs = static_cast<double>(rhs);
    r.verdict = lhs >= rhs ? Verdict::holds : Verdict::violated;
    return r;
}

BoundReport check_kneser(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    BoundReport r = base_report("kneser", kAnchorKneser, a, b, 1);
    if (a.empty() || b.empty()) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    GroupSet s = sumset(a, b);
    Subgroup h = stabilizer(s);
    long long lhs = s.size();
    long long rhs = static_cast<long long>(sumset(a, h.members).size()) +
                    sumset(b, h.members).size() - h.order;
    r.H = h.members.elements();
    r.lhs = static_cast<double>(lhs);
    r.rhs = static_cast<double>(rhs);
    r.verdict = lhs >= rhs ? Verdict::holds : Verdict::violated;
    return r;
}

BoundReport check_cauchy_davenport(const GroupSet& a, const GroupSet& b) {
    require_same_group(a, b);
    const FiniteAbelianGroup& g = a.group();
    if (!g.is_presented_cyclic() || !is_prime(g.order()))
        throw std::invalid_argument("ambient group must be Z_p with p prime");
    BoundReport r = base_report("cd", kAnchorCd, a, b, 1);
    if (a.empty() || b.empty()) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    long long lhs = sumset(a, b).size();
    long long rhs = std::min<long long>(g.order(), a.size() + b.size() - 1);
    r.lhs = static_cast<double>(lhs);
    r.rhs = static_cast<double>(rhs);
    r.verdict = lhs >= rhs ? Verdict::holds : Verdict::violated;
    return r;
}

std::pair<Subgroup, Element> max_coset_subgroup(const GroupSet& s,
                                                const std::vector<Subgroup>& subgroups) {
    if (s.empty()) throw std::invalid_argument("max_coset_subgroup needs a nonempty set");
    const FiniteAbelianGroup& g = s.group();
    Subgroup best = Subgroup::trivial(g);
    Element best_witness = s.first();
    for (const Subgroup& h : subgroups) {  // sorted by (order, bitmask): first hit wins ties
        if (h.order <= best.order) continue;
        for (Element e = 0; e < g.order(); ++e) {
            if (!s.test(e)) continue;
            if (s.contains(h.members.translated(e))) {
                best = h;
                best_witness = e;
                break;
            }
        }
    }
    return {best, best_witness};
}

std::pair<Subgroup, Element> max_coset_subgroup(const GroupSet& s) {
    return max_coset_subgroup(s, enumerate_subgroups(s.group()));
}

BoundReport check_hamidoune_serra(const GroupSet& a, const GroupSet& b, int t,
                                  const std::vector<Subgroup>& subgroups) {
    require_same_group(a, b);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    BoundReport r = base_report("hs", kAnchorHs, a, b, t);
    if (a.size() < t || b.size() < t) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    auto [h, witness_elem] = max_coset_subgroup(sumset(a, b), subgroups);
    long long lhs = popular_sum(a, b, t);
    long long tt = t;
    long long base = tt * (a.size() + b.size()) - tt * tt;
    r.H = h.members.elements();
    r.lhs = static_cast<double>(lhs);
    r.rhs = static_cast<double>(base) - static_cast<double>(h.order) * h.order / 4.0;
    r.real_valued = true;
    r.detail["coset_witness"] = witness_elem;
    // 4*lhs >= 4*base - |H|^2, exactly.
    r.verdict = 4 * lhs >= 4 * base - static_cast<long long>(h.order) * h.order
                    ? Verdict::holds
                    : Verdict::violated;
    return r;
}

BoundReport check_hamidoune_serra(const GroupSet& a, const GroupSet& b, int t) {
    return check_hamidoune_serra(a, b, t, enumerate_subgroups(a.group()));
}

BoundReport check_theorem_new(const GroupSet& a, const GroupSet& b, int t,
                              std::optional<WitnessReport> witness) {
    require_same_group(a, b);
    if (t < 2) throw std::invalid_argument("structure bound needs t >= 2");
    BoundReport r = base_report("new", kAnchorNew, a, b, t);

    const long long tt = t;
    long long hyp_rhs = 0;
    long long lhs = 0;
    bool hyp = false;
    if (a.size() >= t && b.size() >= t) {
        lhs = popular_sum(a, b, t);
        hyp_rhs = tt * (a.size() + b.size()) + threshold_new(t);
        hyp = lhs < hyp_rhs;
    }
    r.lhs = static_cast<double>(lhs);
    r.detail["hypothesis_rhs"] = hyp_rhs;
    if (!hyp) {
        r.rhs = static_cast<double>(hyp_rhs);
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }

    if (witness) {
        // Re-derive every clause; never trust caller verdicts.
        GroupSet ap = GroupSet::from_elements(a.group(), witness->A_prime);
        GroupSet bp = GroupSet::from_elements(a.group(), witness->B_prime);
        r.witness = validate_witness(a, b, t, ap, bp);
    } else {
        FindWitnessOutcome out = find_witness(a, b, t);
        if (out.counterexample) {
            r.rhs = static_cast<double>(hyp_rhs);
            r.verdict = Verdict::violated;
            r.detail["no_witness"] = true;
            r.detail["rep_counts"] = out.counterexample->rep_counts;
            return r;
        }
        r.witness = std::move(out.witness);
    }

    const WitnessReport& w = *r.witness;
    r.H = w.H;
    long long hh = static_cast<long long>(w.H.size());
    long long middle =
        tt * (a.size() + b.size()) - tt * tt - (tt - w.ell) * (hh - w.rho - tt);
    r.rhs = static_cast<double>(middle);
    r.verdict = w.clauses.all() ? Verdict::holds : Verdict::violated;
    return r;
}

MainPropReport check_mainprop_items(const GroupSet& a, const GroupSet& b, int t,
                                    const GroupSet& a_prime, const GroupSet& b_prime,
                                    double alpha) {
    require_same_group(a, b);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (alpha < 0) throw std::invalid_argument("alpha must be >= 0");
    if (!a.contains(a_prime) || !b.contains(b_prime))
        throw std::invalid_argument("witness components must be subsets");

    MainPropReport rep;
    rep.group = a.group().spec();
    rep.A = a.elements();
    rep.B = b.elements();
    rep.t = t;
    rep.alpha = alpha;

    const long long tt = t;
    RepProfile profile = rep_profile(a, b);
    const long long sum = profile.popular_sum(t);
    const long long sizes = a.size() + b.size();

    // Precondition 1: popular sum below t|A|+t|B|-(1+alpha)t^2 (exact at
    // alpha = 0, guarded long double otherwise).
    bool pre_sum;
    if (alpha == 0.0) {
        pre_sum = sum < tt * sizes - tt * tt;
    } else {
        long double bound = static_cast<long double>(tt) * sizes - (1.0L + alpha) * tt * tt;
        pre_sum = static_cast<long double>(sum) < bound - 1e-9L;
    }
    // Precondition 2: the equalities hold for the supplied (A', B').
    GroupSet target = popular_sumset(profile, a.group(), t);
    bool pre_witness = false;
    if (!a_prime.empty() && !b_prime.empty()) {
        GroupSet plain = sumset(a_prime, b_prime);
        pre_witness = (a.size() - a_prime.size()) + (b.size() - b_prime.size()) <= t - 1 &&
                      plain == target && popular_sumset(a_prime, b_prime, t) == plain;
    }
    if (!pre_sum || !pre_witness) {
        rep.verdict = Verdict::hypothesis_not_met;
        return rep;
    }

    Subgroup h = stabilizer(target);
    GroupSet a2 = canonical_subset(a, a_prime, h);
    GroupSet b2 = canonical_subset(b, b_prime, h);
    rep.A2 = a2.elements();
    rep.B2 = b2.elements();
    rep.H = h.members.elements();
    const long long hh = h.order;
    GroupSet a2_sat = sumset(a2, h.members);
    GroupSet b2_sat = sumset(b2, h.members);
    rep.ell = (a.size() - a2.size()) + (b.size() - b2.size());
    rep.rho = (a2_sat.size() - a2.size()) + (b2_sat.size() - b2.size());
    const long long ell = rep.ell;
    const long long rho = rep.rho;

    auto push = [&](int item, bool applicable, bool holds, std::string note) {
        rep.items.push_back(MainPropItem{item, applicable, holds, std::move(note)});
    };

    // Item 1: the equalities and the bound chain transfer to (A'', B'').
    WitnessReport w2 = validate_witness(a, b, t, a2, b2);
    push(1, true,
         w2.valid && w2.clauses.chain_first && w2.clauses.chain_second,
         "conclusion and bound chain for saturated pair");

    // Item 2: |A''+B''| < |A''| + |B''| - (1+alpha)t.
    long long plain_size = sumset(a2, b2).size();
    bool item2;
    if (alpha == 0.0) {
        item2 = plain_size < a2.size() + b2.size() - tt;
    } else {
        long double bound = a2.size() + b2.size() - (1.0L + alpha) * tt;
        item2 = static_cast<long double>(plain_size) < bound - 1e-9L;
    }
    push(2, true, item2, "saturated sumset deficit exceeds (1+alpha)t");

    // Item 3: sum >= sum_t(A'',B'') + ell(|H|-rho) >= t|A|+t|B|-t^2-(t-ell)(|H|-rho-t).
    long long inner_sum = popular_sum(a2, b2, t);
    long long mid3 = inner_sum + ell * (hh - rho);
    long long rhs3 = tt * sizes - tt * tt - (tt - ell) * (hh - rho - tt);
    push(3, true, sum >= mid3 && mid3 >= rhs3, "two-step popular-sum lower bound");

    // Item 4: each removed element leaves a fully unpopular translated slice.
    bool item4 = true;
    GroupSet a_removed = a - a2;
    GroupSet b_removed = b - b2;
    a_removed.for_each([&](Element e) {
        bool exists = false;
        b2.for_each([&](Element bb) {
            GroupSet slice = b2 & h.members.translated(bb);
            if (!slice.translated(e).intersects(target)) exists = true;
        });
        if (!exists) item4 = false;
        if ((b2.translated(e) - target).size() < hh - rho) item4 = false;
    });
    b_removed.for_each([&](Element e) {
        bool exists = false;
        a2.for_each([&](Element aa) {
            GroupSet slice = a2 & h.members.translated(aa);
            if (!slice.translated(e).intersects(target)) exists = true;
        });
        if (!exists) item4 = false;
        if ((a2.translated(e) - target).size() < hh - rho) item4 = false;
    });
    push(4, !a_removed.empty() || !b_removed.empty(), item4,
         "removed elements see >= |H|-rho unpopular sums");

    // Item 5: |H|-rho >= floor(((1+alpha)t^2 - t*ell)/(t-ell)) + 1 >= floor((1+alpha)t)+1
    //         > (1+alpha)t.
    long long floor1, floor2;
    if (alpha == 0.0) {
        floor1 = (tt * tt - tt * ell) / (tt - ell);
        floor2 = tt;
    } else {
        floor1 = static_cast<long long>(
            std::floor(((1.0L + alpha) * tt * tt - tt * ell) / (tt - ell) + 1e-9L));
        floor2 = static_cast<long long>(std::floor((1.0L + alpha) * tt + 1e-9L));
    }
    bool item5 = hh - rho >= floor1 + 1 && floor1 + 1 >= floor2 + 1 &&
                 static_cast<long double>(floor2 + 1) > (1.0L + alpha) * tt;
    push(5, true, item5, "saturated coset filling bound");

    // Item 6 (only when ell = t-1): extending A by any new element outside
    // A''+H (resp. B by one outside B''+H) lifts the popular sum to at least
    // t|A.|+t|B.|-t^2.  Elements of A itself are excluded: for them the
    // "extension" is a no-op and the inequality would contradict the
    // hypothesis, so only proper extensions are quantified over.
    if (ell == t - 1) {
        bool item6 = true;
        const FiniteAbelianGroup& grp = a.group();
        for (Element e = 0; e < grp.order(); ++e) {
            if (!a2_sat.test(e) && !a.test(e)) {
                GroupSet ax = a;
                ax.add(e);
                long long lift = popular_sum(ax, b, t);
                if (lift < tt * (ax.size() + b.size()) - tt * tt) item6 = false;
            }
            if (!b2_sat.test(e) && !b.test(e)) {
                GroupSet bx = b;
                bx.add(e);
                long long lift = popular_sum(a, bx, t);
                if (lift < tt * (a.size() + bx.size()) - tt * tt) item6 = false;
            }
        }
        push(6, true, item6, "one-element extensions cross the target bound");
    } else {
        push(6, false, true, "not applicable (ell != t-1)");
    }

    bool all = true;
    for (const MainPropItem& it : rep.items)
        if (it.applicable && !it.holds) all = false;
    rep.verdict = all ? Verdict::holds : Verdict::violated;
    return rep;
}

ConjectureParams conjecture_params(const GroupSet& a, const GroupSet& b, int t) {
    ConjectureParams p;
    p.t = t;
    Subgroup h = stabilizer(popular_sumset(a, b, t));
    p.h = h.order;
    p.u = (t - 1) % p.h + 1;
    p.s = (t - p.u) / p.h;
    p.rhs = static_cast<long long>(t) * (a.size() + b.size()) - static_cast<long long>(t) * t -
            static_cast<long long>(p.u) * (p.h - p.u);
    return p;
}

BoundReport check_conjecture(const GroupSet& a, const GroupSet& b, int t,
                             std::optional<std::pair<GroupSet, GroupSet>> witness) {
    require_same_group(a, b);
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    BoundReport r = base_report("conjecture", kAnchorConjecture, a, b, t);

    const long long tt = t;
    long long lhs = 0;
    bool hyp = false;
    if (a.size() >= t && b.size() >= t) {
        lhs = popular_sum(a, b, t);
        hyp = lhs < tt * (a.size() + b.size()) - tt * tt;
    }
    r.lhs = static_cast<double>(lhs);
    if (!hyp) {
        r.rhs = static_cast<double>(tt * (a.size() + b.size()) - tt * tt);
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }

    RepProfile profile = rep_profile(a, b);
    GroupSet target_t = popular_sumset(profile, a.group(), t);
    Subgroup h = stabilizer(target_t);
    ConjectureParams p;
    p.t = t;
    p.h = h.order;
    p.u = (t - 1) % p.h + 1;
    p.s = (t - p.u) / p.h;
    p.rhs = tt * (a.size() + b.size()) - tt * tt -
            static_cast<long long>(p.u) * (p.h - p.u);

    r.H = h.members.elements();
    r.rhs = static_cast<double>(p.rhs);
    r.detail["h"] = p.h;
    r.detail["s"] = p.s;
    r.detail["u"] = p.u;
    r.detail["equality"] = lhs == p.rhs;
    r.verdict = lhs >= p.rhs ? Verdict::holds : Verdict::violated;

    if (witness) {
        const GroupSet& ap = witness->first;
        const GroupSet& bp = witness->second;
        if (!a.contains(ap) || !b.contains(bp))
            throw std::invalid_argument("witness components must be subsets");
        int ell = (a.size() - ap.size()) + (b.size() - bp.size());
        GroupSet ap_sat = sumset(ap, h.members);
        GroupSet bp_sat = sumset(bp, h.members);
        int rho = (ap_sat.size() - ap.size()) + (bp_sat.size() - bp.size());
        long long strong_rhs = tt * (a.size() + b.size()) - tt * tt -
                               static_cast<long long>(p.u - ell) * (p.h - rho - p.u);
        GroupSet plain = sumset(ap, bp);
        GroupSet pop_u = popular_sumset(ap, bp, p.u);
        GroupSet target_u = popular_sumset(profile, a.group(), p.u);
        bool sumset_eq = plain == pop_u && plain == target_u;
        bool stab_eq = stabilizer(plain) == h && stabilizer(pop_u) == h;
        r.detail["witness"] = {
            {"A_prime", ap.elements()},          {"B_prime", bp.elements()},
            {"ell", ell},                        {"rho", rho},
            {"removal_bound", ell < p.u},        {"sumset_eq", sumset_eq},
            {"stabilizer_eq", stab_eq},          {"strong_rhs", strong_rhs},
            {"strong_holds", lhs >= strong_rhs},
        };
    }
    return r;
}

}  // namespace popsum
