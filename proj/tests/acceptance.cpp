// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Everything is pinned here — group lists, seeds, sample counts, tolerances —
// and every expected value is either exact integer arithmetic or an explicit
// guard band stated next to the comparison.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "popsum/constructions.hpp"
#include "popsum/format.hpp"
#include "popsum/json_io.hpp"
#include "popsum/restricted.hpp"
#include "popsum/search.hpp"
#include "popsum/witness.hpp"

using namespace popsum;
using nlohmann::json;

namespace {

constexpr std::uint64_t kSeed = 20260810;

// All abelian groups of order <= 10, plus Z2xZ6 as listed for the scan jobs.
const std::vector<std::string> kSmallGroupList = {
    "Z2",    "Z3",    "Z4",    "Z5",       "Z6",    "Z7",    "Z8",
    "Z9",    "Z10",   "Z2xZ2", "Z2xZ4",    "Z2xZ2xZ2", "Z3xZ3", "Z2xZ6"};

int failures = 0;

struct Criterion {
    int id;
    std::string label;
    bool ok = true;
    std::string stats;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(int id_, std::string label_) : id(id_), label(std::move(label_)) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            stats += (stats.empty() ? "" : "; ") + what;
        }
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << "criterion " << id << " (" << label << "): "
                  << (ok ? "PASS" : "FAIL") << " [" << ms << " ms]"
                  << (stats.empty() ? "" : " -- " + stats) << "\n";
        if (!ok) ++failures;
    }
};

GroupSet set_from_mask(const FiniteAbelianGroup& g, std::uint64_t mask) {
    GroupSet s(g);
    for (int e = 0; e < g.order(); ++e)
        if (mask >> e & 1) s.add(e);
    return s;
}

// ---------------------------------------------------------------------------
// 1. Pollard, exhaustively over Z_p for p <= 11, every t <= min(|A|, |B|).
// ---------------------------------------------------------------------------
void criterion_1() {
    Criterion c(1, "pollard exhaustive, primes <= 11");
    long long instances = 0, equalities = 0;
    for (int p : {2, 3, 5, 7, 11}) {
        FiniteAbelianGroup g({p});
        const std::uint64_t full = (1ull << p) - 1;

        for (std::uint64_t am = 1; am <= full; ++am) {
            GroupSet a = set_from_mask(g, am);
            GroupSet neg_a = a.negated();
            // g - A for every g, hoisted per A.
            std::vector<GroupSet> translates;
            translates.reserve(p);
            for (Element e = 0; e < p; ++e) translates.push_back(neg_a.translated(e));

            for (std::uint64_t bm = 1; bm <= full; ++bm) {
                GroupSet b = set_from_mask(g, bm);
                // Histogram of r-values, then cnt_ge[i] = #{g : r(g) >= i}.
                std::vector<int> hist(p + 1, 0);
                for (Element e = 0; e < p; ++e) ++hist[translates[e].intersection_size(b)];
                const int tmax = std::min(a.size(), b.size());
                long long sum = 0;
                int ge = p;
                for (int t = 1; t <= tmax; ++t) {
                    ge -= hist[t - 1];  // #{g : r >= t}
                    sum += ge;
                    long long rhs = std::min<long long>(
                        static_cast<long long>(t) * p,
                        static_cast<long long>(t) * (a.size() + b.size()) -
                            static_cast<long long>(t) * t);
                    ++instances;
                    if (sum < rhs) c.expect(false, "bound violated at " + g.spec());
                    if (sum == rhs) ++equalities;
                }
                // Cross-check the report path on a sample.
                if (((am * 2654435761u) ^ bm) % 4096 == 0) {
                    BoundReport rep = check_pollard(a, b, std::max(1, tmax));
                    c.expect(rep.verdict == Verdict::holds, "checker disagreed");
                }
            }
        }
    }
    c.stats = std::to_string(instances) + " (p,A,B,t) instances, " +
              std::to_string(equalities) + " met with equality";
    c.finish();
}

// ---------------------------------------------------------------------------
// 2. Kneser, Cauchy-Davenport, pigeonhole, and the sumset rep lower bound,
//    exhaustively over all subset pairs of the small-group list.
// ---------------------------------------------------------------------------
void criterion_2() {
    Criterion c(2, "kneser/cd/pigeonhole exhaustive, |G| <= 10 list");
    long long pairs = 0;
    for (const std::string& spec : kSmallGroupList) {
        FiniteAbelianGroup g = parse_group(spec);
        const int n = g.order();
        const bool prime = g.is_presented_cyclic() && is_prime(n);
        const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;

        for (std::uint64_t am = 1; am <= full; ++am) {
            GroupSet a = set_from_mask(g, am);
            GroupSet neg_a = a.negated();
            std::vector<GroupSet> translates;
            translates.reserve(n);
            for (Element e = 0; e < n; ++e) translates.push_back(neg_a.translated(e));

            for (std::uint64_t bm = 1; bm <= full; ++bm) {
                GroupSet b = set_from_mask(g, bm);
                ++pairs;
                const int ab = a.size() + b.size();

                GroupSet plain(g);
                for (Element e = 0; e < n; ++e) {
                    int r = translates[e].intersection_size(b);
                    if (r < ab - n) c.expect(false, "pigeonhole violated");
                    if (r >= 1) plain.add(e);
                }
                plain.for_each([&](Element e) {
                    if (translates[e].intersection_size(b) < ab - plain.size())
                        c.expect(false, "sumset rep bound violated");
                });

                Subgroup h = stabilizer(plain);
                long long rhs = static_cast<long long>(sumset(a, h.members).size()) +
                                sumset(b, h.members).size() - h.order;
                if (plain.size() < rhs) c.expect(false, "kneser violated at " + spec);

                if (prime && plain.size() < std::min<long long>(n, ab - 1))
                    c.expect(false, "cauchy-davenport violated at " + spec);

                if (((am * 2654435761u) ^ bm) % 8192 == 0) {
                    c.expect(check_kneser(a, b).verdict == Verdict::holds,
                             "kneser checker disagreed");
                    if (prime)
                        c.expect(check_cauchy_davenport(a, b).verdict == Verdict::holds,
                                 "cd checker disagreed");
                }
            }
        }
    }
    c.stats = std::to_string(pairs) + " pairs";
    c.finish();
}

// Shared state between criteria 3, 7, and 9.
struct ScanOutputs {
    ScanJob exhaustive_job;
    ScanJob random_job;
    std::string exhaustive_jsonl_8w;
    std::string random_jsonl_8w;
    long long conjecture_checked = 0;
    long long conjecture_violations_seen = 0;
};

std::string to_jsonl(const ScanResult& r) {
    std::string out;
    for (const Finding& f : r.findings) out += json(f).dump() + "\n";
    json summary;
    summary["schema"] = kSchemaVersion;
    summary["summary"] = r.summary;
    summary["end_cursor"] = r.end_cursor;
    summary["total_instances"] = r.total_instances;
    out += summary.dump() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// 3. The structure bound, exhaustively (t in {2,3}, normalized pairs) over
//    the small-group list, plus seed-pinned randomized Z12.
// ---------------------------------------------------------------------------
void criterion_3(ScanOutputs& out) {
    Criterion c(3, "structure-bound exhaustive + randomized Z12");

    ScanJob job;
    job.groups = kSmallGroupList;
    job.t_min = 2;
    job.t_max = 3;
    job.mode = ScanMode::exhaustive;
    job.goal = ScanGoal::verify_all;
    job.workers = 8;
    out.exhaustive_job = job;
    ScanResult ex = scan(job);
    out.exhaustive_jsonl_8w = to_jsonl(ex);
    c.expect(ex.summary.violated == 0, "violations in exhaustive scan");
    c.expect(ex.summary.no_witness == 0, "witness search failed somewhere");
    c.expect(ex.findings.empty(), "findings emitted");
    c.expect(ex.summary.hypothesis_met == ex.summary.witnesses_found,
             "hypothesis/witness count mismatch");
    c.expect(ex.summary.hypothesis_met > 0, "hypothesis never fired");

    ScanJob rj;
    rj.groups = {"Z12"};
    rj.t_min = 2;
    rj.t_max = 3;
    rj.mode = ScanMode::random;
    rj.samples = 1000000;
    rj.seed = kSeed;
    rj.workers = 8;
    out.random_job = rj;
    ScanResult rr = scan(rj);
    out.random_jsonl_8w = to_jsonl(rr);
    c.expect(rr.summary.violated == 0, "violations in randomized scan");
    c.expect(rr.summary.no_witness == 0, "witness search failed in randomized scan");
    c.expect(rr.summary.pairs_checked == 1000000, "sample count off");

    out.conjecture_checked = ex.summary.conjecture_checked + rr.summary.conjecture_checked;
    out.conjecture_violations_seen = 0;
    for (const Finding& f : ex.findings)
        if (f.check == "conjecture") ++out.conjecture_violations_seen;
    for (const Finding& f : rr.findings)
        if (f.check == "conjecture") ++out.conjecture_violations_seen;

    c.stats = "exhaustive: " + std::to_string(ex.summary.pairs_checked) + " pairs, " +
              std::to_string(ex.summary.witnesses_found) + " witnesses; random: " +
              std::to_string(rr.summary.witnesses_found) + " witnesses";
    c.finish();
}

// ---------------------------------------------------------------------------
// 4. The threshold function at the pinned points.
// ---------------------------------------------------------------------------
void criterion_4() {
    Criterion c(4, "threshold function values");
    c.expect(threshold_new(2) == -4, "t=2");
    c.expect(threshold_new(3) == -10, "t=3");
    c.expect(threshold_new(4) == -18, "t=4");
    c.expect(threshold_new(2) == -2 * 4 + 6 - 2, "t=2 coincidence with -2t^2+3t-2");
    c.finish();
}

// ---------------------------------------------------------------------------
// 5. Dot-grid identities on 10^4 seeded random instances, |G| <= 16.
// ---------------------------------------------------------------------------
void criterion_5() {
    Criterion c(5, "dot-grid identities, 10^4 random instances");
    const std::vector<std::string> pool = {"Z5",  "Z6",  "Z7",  "Z8",    "Z9",       "Z10",
                                           "Z11", "Z12", "Z13", "Z14",   "Z15",      "Z16",
                                           "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3", "Z2xZ6", "Z4xZ4",
                                           "Z2xZ8"};
    std::mt19937_64 rng(kSeed);
    std::vector<FiniteAbelianGroup> groups;
    for (const std::string& spec : pool) groups.push_back(parse_group(spec));

    long long checked = 0;
    while (checked < 10000) {
        const FiniteAbelianGroup& g = groups[rng() % groups.size()];
        const int n = g.order();
        const std::uint64_t full = (1ull << n) - 1;
        GroupSet a = set_from_mask(g, rng() & full);
        GroupSet b = set_from_mask(g, rng() & full);
        if (a.empty() || b.empty()) continue;
        int t = 1 + static_cast<int>(rng() % std::min(a.size(), b.size()));
        if (b.size() < t) continue;
        ++checked;
        DotGridStats s = dot_grid_stats(a, b, t);
        long long ab = static_cast<long long>(a.size()) * b.size();
        bool hole_identity =
            s.popular_sum ==
            ab - static_cast<long long>(s.x.size()) * (b.size() - t) + s.hole_count;
        bool edge_identity =
            s.popular_sum == static_cast<long long>(t) * s.x.size() + s.edge_count;
        c.expect(hole_identity, "hole-count identity failed");
        c.expect(edge_identity, "edge-count identity failed");
        c.expect(s.popular_sum == popular_sum(a, b, t), "popular sum mismatch");
    }
    c.stats = std::to_string(checked) + " instances";
    c.finish();
}

// ---------------------------------------------------------------------------
// 6. Construction formulas: fixed matrix, the printed-form discrepancy, and
//    the recursive families.
// ---------------------------------------------------------------------------
void criterion_6(std::vector<ConstructionResult>& all_instances) {
    Criterion c(6, "construction formula matrix");

    auto subgroup_of = [](const FiniteAbelianGroup& g, const std::vector<Element>& elems) {
        return Subgroup::from_set(GroupSet::from_elements(g, elems));
    };
    auto coset_subgroup = [&](const FiniteAbelianGroup& g, int step) {
        std::vector<Element> elems;
        for (Element e = 0; e < g.order(); e += step) elems.push_back(e);
        return subgroup_of(g, elems);
    };

    int matrix_count = 0;
    auto take = [&](ConstructionResult r) {
        c.expect(r.matches, r.family + " prediction mismatch over " + r.group);
        all_instances.push_back(r);
        ++matrix_count;
    };

    {  // kneser_pair grid (12 instances, Z8..Z24)
        FiniteAbelianGroup z8 = parse_group("Z8"), z9 = parse_group("Z9"),
                           z12 = parse_group("Z12"), z16 = parse_group("Z16"),
                           z18 = parse_group("Z18"), z20 = parse_group("Z20"),
                           z24 = parse_group("Z24");
        take(gen_kneser_pair(z8, coset_subgroup(z8, 4), 1, 2, 1));
        take(gen_kneser_pair(z8, coset_subgroup(z8, 2), 2, 1, 1));
        take(gen_kneser_pair(z8, coset_subgroup(z8, 2), 3, 1, 1));
        take(gen_kneser_pair(z9, coset_subgroup(z9, 3), 2, 2, 1));
        take(gen_kneser_pair(z12, coset_subgroup(z12, 4), 2, 2, 1));
        take(gen_kneser_pair(z12, coset_subgroup(z12, 3), 3, 2, 1));
        take(gen_kneser_pair(z16, coset_subgroup(z16, 4), 2, 2, 2));
        take(gen_kneser_pair(z16, coset_subgroup(z16, 2), 4, 1, 1));
        take(gen_kneser_pair(z18, coset_subgroup(z18, 3), 4, 2, 1));
        take(gen_kneser_pair(z20, coset_subgroup(z20, 4), 3, 2, 2));
        take(gen_kneser_pair(z20, coset_subgroup(z20, 5), 2, 3, 2));
        take(gen_kneser_pair(z24, coset_subgroup(z24, 4), 4, 2, 2));

        // ap_cosets grid (12 instances)
        FiniteAbelianGroup z10 = parse_group("Z10");
        take(gen_ap_cosets(z8, coset_subgroup(z8, 4), 0, 1, 2, 1));
        take(gen_ap_cosets(z10, coset_subgroup(z10, 5), 0, 1, 3, 2));
        take(gen_ap_cosets(z12, coset_subgroup(z12, 4), 0, 2, 2, 2));
        take(gen_ap_cosets(z12, coset_subgroup(z12, 4), 0, 1, 2, 1));
        take(gen_ap_cosets(z12, coset_subgroup(z12, 6), 1, 1, 3, 2));
        take(gen_ap_cosets(z16, coset_subgroup(z16, 4), 1, 1, 2, 2));
        take(gen_ap_cosets(z16, coset_subgroup(z16, 4), 1, 2, 2, 2));
        take(gen_ap_cosets(z18, coset_subgroup(z18, 6), 1, 1, 3, 3));
        take(gen_ap_cosets(z18, coset_subgroup(z18, 6), 1, 2, 2, 2));
        take(gen_ap_cosets(z20, coset_subgroup(z20, 4), 0, 3, 2, 2));
        take(gen_ap_cosets(z24, coset_subgroup(z24, 6), 1, 2, 2, 3));
        take(gen_ap_cosets(z24, coset_subgroup(z24, 8), 2, 1, 3, 3));
    }
    c.expect(matrix_count >= 20, "matrix smaller than 20 instances");

    // minus_self: the verified form, and the printed-form discrepancy logged
    // as a formula_discrepancy finding.
    {
        FiniteAbelianGroup z8 = parse_group("Z8");
        ConstructionResult ms = gen_minus_self(z8, coset_subgroup(z8, 4), 1, 1);
        c.expect(ms.direct_sum == 14, "minus_self direct sum");
        c.expect(ms.predicted_sum == 14, "minus_self |A|^2 form");
        c.expect(ms.printed_alternative.has_value() && *ms.printed_alternative == 23,
                 "printed alternative");
        c.expect(ms.matches, "minus_self mismatch");
        all_instances.push_back(ms);

        Finding disc;
        disc.kind = FindingKind::formula_discrepancy;
        disc.check = "minus_self printed form";
        disc.group = ms.group;
        disc.A = ms.A;
        disc.B = ms.B;
        disc.t = ms.t;
        disc.reports = json::array({json(ms)});
        std::cout << json(disc).dump() << "\n";

        ConstructionResult ms2 =
            gen_minus_self(parse_group("Z12"), coset_subgroup(parse_group("Z12"), 4), 1, 2);
        c.expect(ms2.direct_sum == 33 && ms2.matches, "minus_self u=2 instance");
        all_instances.push_back(ms2);
    }

    // Recursive families: oracle-confirmed nested instances.
    {
        FiniteAbelianGroup z16 = parse_group("Z16");
        Subgroup k16 = coset_subgroup(z16, 4);
        ConstructionResult r1 = gen_recursive_1(z16, k16, 1, 1, GroupSet::of(z16, {0, 8}),
                                                GroupSet::of(z16, {0, 8}));
        ConstructionResult r2 =
            gen_recursive_1(z16, k16, 1, 2, k16.members, GroupSet::of(z16, {0, 4, 8}));

        FiniteAbelianGroup z24 = parse_group("Z24");
        Subgroup k24 = coset_subgroup(z24, 6);
        ConstructionResult r3 = gen_recursive_1(z24, k24, 1, 1, GroupSet::of(z24, {0, 12}),
                                                GroupSet::of(z24, {0, 12}));

        ConstructionResult base16 = gen_kneser_pair(z16, k16, 2, 1, 1);
        ConstructionResult r4 = gen_recursive_2(
            GroupSet::from_elements(z16, base16.A), GroupSet::from_elements(z16, base16.B),
            k16, 2, k16.members, GroupSet::of(z16, {0, 4, 8}));

        FiniteAbelianGroup z20 = parse_group("Z20");
        Subgroup k20 = coset_subgroup(z20, 4);
        ConstructionResult base20 = gen_kneser_pair(z20, k20, 2, 1, 1);
        ConstructionResult r5 = gen_recursive_2(
            GroupSet::from_elements(z20, base20.A), GroupSet::from_elements(z20, base20.B),
            k20, 2, k20.members, GroupSet::of(z20, {0, 4, 8, 12}));

        int nested = 0;
        for (const ConstructionResult& r : {r1, r2, r3, r4, r5}) {
            c.expect(r.matches, r.family + " identity failed over " + r.group);
            long long cap = static_cast<long long>(r.t) * (r.A.size() + r.B.size()) -
                            static_cast<long long>(r.t) * r.t;
            c.expect(r.direct_sum < cap, r.family + " not below the threshold");
            all_instances.push_back(r);
            ++nested;
        }
        c.expect(nested >= 3, "fewer than 3 recursive instances");
    }

    c.stats = std::to_string(all_instances.size()) + " generated instances";
    c.finish();
}

// ---------------------------------------------------------------------------
// 7. The conjecture across every instance from criteria 3 and 6.
// ---------------------------------------------------------------------------
void criterion_7(const ScanOutputs& scans, const std::vector<ConstructionResult>& instances) {
    Criterion c(7, "conjecture bound across scans and constructions");
    c.expect(scans.conjecture_violations_seen == 0, "scan-side conjecture violation");
    c.expect(scans.conjecture_checked > 0, "scan never checked the conjecture");

    long long equalities = 0;
    for (const ConstructionResult& r : instances) {
        FiniteAbelianGroup g = parse_group(r.group);
        GroupSet a = GroupSet::from_elements(g, r.A);
        GroupSet b = GroupSet::from_elements(g, r.B);
        long long cap = static_cast<long long>(r.t) * (a.size() + b.size()) -
                        static_cast<long long>(r.t) * r.t;
        if (r.direct_sum >= cap) continue;  // conjecture hypothesis not met
        BoundReport rep = check_conjecture(a, b, r.t);
        c.expect(rep.verdict == Verdict::holds,
                 "conjecture violated on " + r.family + " over " + r.group);
        bool equality = rep.detail.value("equality", false);
        if (equality) ++equalities;
        if (r.family == "minus_self" || r.family == "ap_cosets")
            c.expect(equality, r.family + " over " + r.group + " missed equality");
    }
    c.stats = std::to_string(scans.conjecture_checked) + " scan checks, " +
              std::to_string(equalities) + " construction equalities";
    c.finish();
}

// ---------------------------------------------------------------------------
// 8. Restricted sumsets over all groups of order <= 8, 200 seeded taus per
//    qualifying pair.
// ---------------------------------------------------------------------------
void criterion_8() {
    Criterion c(8, "restricted-sumset bounds, |G| <= 8, 200 taus per pair");
    const std::vector<std::string> groups = {"Z1",    "Z2",    "Z3",       "Z4",
                                             "Z5",    "Z6",    "Z7",       "Z8",
                                             "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2"};
    long long pairs = 0, taus = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        FiniteAbelianGroup g = parse_group(groups[gi]);
        const int n = g.order();
        const std::uint64_t full = (1ull << n) - 1;
        const double lev = lev_bound(n);

        for (std::uint64_t am = 1; am <= full; ++am) {
            GroupSet a = set_from_mask(g, am);
            for (std::uint64_t bm = 1; bm <= full; ++bm) {
                GroupSet b = set_from_mask(g, bm);
                if (a.size() + b.size() < n + 1) continue;
                ++pairs;
                const int m = std::min(a.size(), b.size());
                const double newb = new_bound(n, m);
                const int bothcases_t =
                    static_cast<int>(std::ceil(std::sqrt(3.0 * m) / 2.0));

                std::mt19937_64 rng(kSeed ^ (gi * 0x9e3779b97f4a7c15ull) ^ (am << 20) ^ bm);
                for (int rep = 0; rep < 200; ++rep) {
                    ++taus;
                    TauMap tau = TauMap::random(a, rng);
                    GroupSet rs = restricted_sumset(a, b, tau);
                    int lhs = rs.size();
                    c.expect(tau_size(a, b, tau) <= m, "tau_size exceeded min(|A|,|B|)");
                    // Integer lhs vs irrational/half-integer rhs: 1e-9 band.
                    c.expect(lhs > lev - 1e-9, "strict bound violated");
                    c.expect(lhs >= newb - 1e-9, "popular-sum bound violated");
                    if (bothcases_t >= 2 && bothcases_t <= m) {
                        double rhs = n - 4.0 / 3.0 * bothcases_t -
                                     static_cast<double>(m) / bothcases_t + 5.0 / 3.0;
                        c.expect(lhs >= rhs - 1e-9, "intermediate bound violated");
                    }
                }
                if ((am ^ bm) % 512 == 0) {
                    std::mt19937_64 rng2(kSeed ^ am ^ bm);
                    TauMap tau = TauMap::random(a, rng2);
                    c.expect(check_restricted(a, b, tau).verdict == Verdict::holds,
                             "restricted checker disagreed");
                }
            }
        }
    }
    c.stats = std::to_string(pairs) + " pairs, " + std::to_string(taus) + " taus";
    c.finish();
}

// ---------------------------------------------------------------------------
// 9. Determinism and plumbing: worker-count invariance (byte-identical
//    JSONL), checkpoint split/merge, and fuzzed JSON round-trips.
// ---------------------------------------------------------------------------
void criterion_9(const ScanOutputs& scans) {
    Criterion c(9, "determinism, checkpointing, JSON round-trips");

    {  // Byte-identical JSONL across 1 and 8 workers for criterion 3's jobs.
        ScanJob ex1 = scans.exhaustive_job;
        ex1.workers = 1;
        c.expect(to_jsonl(scan(ex1)) == scans.exhaustive_jsonl_8w,
                 "exhaustive JSONL differs between 1 and 8 workers");
        ScanJob rj1 = scans.random_job;
        rj1.workers = 1;
        c.expect(to_jsonl(scan(rj1)) == scans.random_jsonl_8w,
                 "random JSONL differs between 1 and 8 workers");
    }

    {  // A finding-producing job is also worker-invariant, byte for byte.
        ScanJob hunt;
        hunt.groups = {"Z8", "Z9"};
        hunt.t_min = 2;
        hunt.t_max = 3;
        hunt.goal = ScanGoal::hunt_conjecture_violation;
        ScanResult one = scan(hunt);
        hunt.workers = 8;
        ScanResult eight = scan(hunt);
        c.expect(!one.findings.empty(), "equality hunt produced no findings");
        c.expect(to_jsonl(one) == to_jsonl(eight), "hunt JSONL differs across workers");

        // Checkpoint split/merge equality at several cuts.
        for (long long cut : {1ll, 17ll, one.total_instances / 3, one.total_instances - 1}) {
            ScanJob lo = hunt, hi = hunt;
            lo.workers = 1;
            hi.workers = 1;
            lo.cursor = 0;
            lo.limit = cut;
            hi.cursor = cut;
            ScanResult first = scan(lo);
            ScanResult second = scan(hi);
            c.expect(first.end_cursor == cut, "cursor did not stop at the cut");
            ScanSummary merged = first.summary;
            merged += second.summary;
            c.expect(merged == one.summary, "split summaries do not merge");
            std::vector<Finding> joined = first.findings;
            joined.insert(joined.end(), second.findings.begin(), second.findings.end());
            c.expect(joined == one.findings, "split findings do not concatenate");
        }
        c.expect(scan_job_hash(hunt) == scan_job_hash(one.findings.empty() ? hunt : hunt),
                 "job hash unstable");
    }

    {  // 10^3 fuzzed reports round-trip byte-for-byte.
        std::mt19937_64 rng(kSeed);
        const char* verdicts[] = {"holds", "violated", "hypothesis-not-met"};
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            BoundReport r;
            r.theorem = "fuzz";
            r.group = "Z" + std::to_string(2 + rng() % 40);
            for (int k = 0; k < static_cast<int>(1 + rng() % 8); ++k)
                r.A.push_back(static_cast<Element>(rng() % 40));
            for (int k = 0; k < static_cast<int>(1 + rng() % 8); ++k)
                r.B.push_back(static_cast<Element>(rng() % 40));
            r.t = 1 + static_cast<int>(rng() % 6);
            r.lhs = static_cast<double>(static_cast<long long>(rng() % 5000));
            r.real_valued = rng() & 1;
            r.rhs = r.real_valued ? static_cast<long long>(rng() % 20000) / 4.0
                                  : static_cast<double>(static_cast<long long>(rng() % 5000));
            r.verdict = verdict_from_name(verdicts[rng() % 3]);
            r.anchor = "fuzz";
            if (rng() & 1) r.detail["k"] = static_cast<long long>(rng() % 97);
            json j = r;
            BoundReport back = j.get<BoundReport>();
            if (!(back == r) || json(back).dump() != j.dump()) ++bad;

            Finding f;
            f.kind = static_cast<FindingKind>(rng() % 4);
            f.check = "fuzz";
            f.group = r.group;
            f.A = r.A;
            f.B = r.B;
            f.t = r.t;
            f.seed = rng();
            f.instance_index = static_cast<long long>(rng() % 1000000);
            f.rep_counts.assign(4 + rng() % 8, 0);
            for (int& x : f.rep_counts) x = static_cast<int>(rng() % 12);
            f.reports = json::array({j});
            json jf = f;
            Finding fback = jf.get<Finding>();
            if (!(fback == f) || json(fback).dump() != jf.dump()) ++bad;
        }
        c.expect(bad == 0, std::to_string(bad) + " round-trip failures");
    }

    c.finish();
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    ScanOutputs scans;
    std::vector<ConstructionResult> instances;

    criterion_1();
    criterion_2();
    criterion_3(scans);
    criterion_4();
    criterion_5();
    criterion_6(instances);
    criterion_7(scans, instances);
    criterion_8();
    criterion_9(scans);

    auto total = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << failures << " failing criteria, " << total << " s total)\n";
    return failures == 0 ? 0 : 1;
}
