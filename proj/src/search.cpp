#include "popsum/search.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include "popsum/format.hpp"
#include "popsum/json_io.hpp"
#include "popsum/witness.hpp"

namespace popsum {

namespace {

constexpr int kHardMaskCap = 20;  // subset masks are enumerated in 64-bit words

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct GroupCtx {
    FiniteAbelianGroup group;
    std::vector<Subgroup> subgroups;
    bool prime_cyclic = false;
    long long masks_per_set = 0;   // exhaustive mode
    long long pairs = 0;           // exhaustive mode
};

struct JobCtx {
    const ScanJob* job = nullptr;
    // Heap-pinned: cached subgroup GroupSets point back at their group, so
    // the group objects must never relocate.
    std::vector<std::unique_ptr<GroupCtx>> groups;
    long long total = 0;
};

JobCtx prepare(const ScanJob& job) {
    if (job.groups.empty()) throw std::invalid_argument("scan needs at least one group");
    if (job.t_min < 1 || job.t_max < job.t_min) throw std::invalid_argument("bad t range");
    if (job.goal == ScanGoal::hunt_tightness && (job.t_min < 2 || job.t_max > 4))
        throw std::invalid_argument("tightness hunting is defined for t in [2, 4]");

    JobCtx ctx;
    ctx.job = &job;
    for (const std::string& spec : job.groups) {
        auto g = std::make_unique<GroupCtx>(GroupCtx{parse_group(spec), {}, false, 0, 0});
        const int n = g->group.order();
        if (job.mode == ScanMode::exhaustive) {
            if (n > job.exhaustive_cap)
                throw std::length_error("group order exceeds the exhaustive cap");
            if (n > kHardMaskCap) throw std::length_error("group too large for mask enumeration");
            g->masks_per_set = job.normalize ? (1ll << (n - 1)) : (1ll << n) - 1;
            g->pairs = g->masks_per_set * g->masks_per_set;
        } else {
            if (n > 64) throw std::length_error("group too large for random sampling");
            if (job.t_min > n) throw std::invalid_argument("t exceeds the group order");
        }
        g->subgroups = enumerate_subgroups(g->group);
        g->prime_cyclic = g->group.is_presented_cyclic() && is_prime(n);
        ctx.groups.push_back(std::move(g));
    }
    if (job.mode == ScanMode::exhaustive) {
        ctx.total = 0;
        for (const auto& g : ctx.groups) ctx.total += g->pairs;
    } else {
        ctx.total = job.samples;
    }
    return ctx;
}

GroupSet set_from_mask(const FiniteAbelianGroup& g, std::uint64_t mask) {
    GroupSet s(g);
    while (mask) {
        int b = std::countr_zero(mask);
        s.add(b);
        mask &= mask - 1;
    }
    return s;
}

struct Instance {
    const GroupCtx* gctx = nullptr;
    GroupSet a, b;
    bool skipped = false;
};

Instance decode_instance(const JobCtx& ctx, long long idx) {
    const ScanJob& job = *ctx.job;
    Instance inst;
    if (job.mode == ScanMode::exhaustive) {
        long long rem = idx;
        for (const auto& gp : ctx.groups) {
            const GroupCtx& g = *gp;
            if (rem < g.pairs) {
                long long ka = rem / g.masks_per_set;
                long long kb = rem % g.masks_per_set;
                auto mask = [&](long long k) {
                    return job.normalize ? (static_cast<std::uint64_t>(k) << 1) | 1ull
                                         : static_cast<std::uint64_t>(k) + 1;
                };
                inst.gctx = &g;
                inst.a = set_from_mask(g.group, mask(ka));
                inst.b = set_from_mask(g.group, mask(kb));
                break;
            }
            rem -= g.pairs;
        }
    } else {
        const GroupCtx& g = *ctx.groups[idx % ctx.groups.size()];
        inst.gctx = &g;
        const int n = g.group.order();
        const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
        std::mt19937_64 rng(splitmix64(job.seed ^ splitmix64(static_cast<std::uint64_t>(idx))));
        const int need = std::max({1, job.t_min, job.min_size});
        for (int tries = 0;; ++tries) {
            if (tries > 1000000)
                throw std::runtime_error("random sampling cannot satisfy the size filters");
            std::uint64_t am = rng() & full;
            std::uint64_t bm = rng() & full;
            int ca = std::popcount(am), cb = std::popcount(bm);
            if (ca < need || cb < need) continue;
            if (job.max_size >= 0 && (ca > job.max_size || cb > job.max_size)) continue;
            inst.a = set_from_mask(g.group, am);
            inst.b = set_from_mask(g.group, bm);
            break;
        }
        return inst;
    }
    // Exhaustive-mode size filters.
    int lo = std::max(job.min_size, 1);
    if (inst.a.size() < lo || inst.b.size() < lo) inst.skipped = true;
    if (job.max_size >= 0 && (inst.a.size() > job.max_size || inst.b.size() > job.max_size))
        inst.skipped = true;
    return inst;
}

class InstanceRunner {
public:
    InstanceRunner(const JobCtx& ctx, ScanSummary& summary, std::vector<Finding>& findings)
        : ctx_(ctx), job_(*ctx.job), sum_(summary), out_(findings) {}

    void run(long long idx) {
        ++sum_.pairs_total;
        Instance inst = decode_instance(ctx_, idx);
        if (inst.skipped) return;
        ++sum_.pairs_checked;
        idx_ = idx;
        ordinal_ = 0;
        if (job_.goal == ScanGoal::hunt_tightness)
            run_tightness(inst);
        else
            run_battery(inst);
    }

private:
    void emit(FindingKind kind, std::string check, const Instance& inst, int t,
              const RepProfile& prof, nlohmann::json reports) {
        Finding f;
        f.kind = kind;
        f.check = std::move(check);
        f.group = inst.gctx->group.spec();
        f.A = inst.a.elements();
        f.B = inst.b.elements();
        f.t = t;
        f.seed = job_.mode == ScanMode::random ? job_.seed : 0;
        f.instance_index = idx_;
        f.ordinal = ordinal_++;
        f.rep_counts = prof.counts;
        f.reports = std::move(reports);
        out_.push_back(std::move(f));
        ++sum_.findings;
    }

    void tally(Verdict v) {
        ++sum_.checks;
        switch (v) {
            case Verdict::holds: ++sum_.holds; break;
            case Verdict::violated: ++sum_.violated; break;
            case Verdict::hypothesis_not_met: ++sum_.hypothesis_not_met; break;
        }
    }

    // Report-producing checks; a violated verdict becomes a finding.
    void tally_report(const BoundReport& rep, const Instance& inst, const RepProfile& prof) {
        tally(rep.verdict);
        if (rep.verdict == Verdict::violated)
            emit(FindingKind::violation, rep.theorem, inst, rep.t, prof,
                 nlohmann::json::array({rep}));
    }

    void run_battery(const Instance& inst) {
        const GroupCtx& g = *inst.gctx;
        const int n = g.group.order();
        const GroupSet& a = inst.a;
        const GroupSet& b = inst.b;
        RepProfile prof = rep_profile(a, b);

        // Pigeonhole: r(g) >= |A| + |B| - |G| everywhere.
        const int ab = a.size() + b.size();
        bool pigeon = true;
        for (int e = 0; e < n; ++e)
            if (prof.counts[e] < ab - n) pigeon = false;
        tally(pigeon ? Verdict::holds : Verdict::violated);
        if (!pigeon) emit(FindingKind::violation, "pigeonhole", inst, 1, prof, nullptr);

        // r(g) >= |A| + |B| - |A+B| on the sumset.
        GroupSet plain = popular_sumset(prof, g.group, 1);
        bool replow = true;
        plain.for_each([&](Element e) {
            if (prof.counts[e] < ab - plain.size()) replow = false;
        });
        tally(replow ? Verdict::holds : Verdict::violated);
        if (!replow) emit(FindingKind::violation, "rep_lower_bound", inst, 1, prof, nullptr);

        tally_report(check_kneser(a, b), inst, prof);
        if (g.prime_cyclic) tally_report(check_cauchy_davenport(a, b), inst, prof);

        const int t_hi = std::min({job_.t_max, a.size(), b.size()});
        for (int t = job_.t_min; t <= t_hi; ++t) {
            if (g.prime_cyclic) tally_report(check_pollard(a, b, t), inst, prof);
            tally_report(check_hamidoune_serra(a, b, t, g.subgroups), inst, prof);

            const long long tt = t;
            const long long sum_t = prof.popular_sum(t);
            if (t >= 2 && sum_t < tt * ab + threshold_new(t)) {
                ++sum_.hypothesis_met;
                FindWitnessOutcome fw = find_witness(a, b, t);
                if (fw.counterexample) {
                    ++sum_.no_witness;
                    tally(Verdict::violated);
                    emit(FindingKind::violation, "no_witness", inst, t, prof,
                         nlohmann::json::array({*fw.counterexample}));
                } else {
                    ++sum_.witnesses_found;
                    tally_report(check_theorem_new(a, b, t, fw.witness), inst, prof);

                    GroupSet ap = GroupSet::from_elements(g.group, fw.witness->A_prime);
                    GroupSet bp = GroupSet::from_elements(g.group, fw.witness->B_prime);
                    MainPropReport mp = check_mainprop_items(a, b, t, ap, bp, 0.0);
                    bool ok = mp.verdict != Verdict::hypothesis_not_met;
                    for (const MainPropItem& item : mp.items)
                        if (item.item <= 5 && item.applicable && !item.holds) ok = false;
                    tally(ok ? Verdict::holds : Verdict::violated);
                    if (!ok)
                        emit(FindingKind::violation, "mainprop", inst, t, prof,
                             nlohmann::json::array({mp}));
                }
            }

            if (sum_t < tt * ab - tt * tt) {
                ++sum_.conjecture_checked;
                ConjectureParams params = conjecture_params(a, b, t);
                auto uw = search_conclusion_witness(a, b, params.u);
                BoundReport cj = check_conjecture(a, b, t, uw);
                tally(cj.verdict);
                if (cj.verdict == Verdict::violated)
                    emit(FindingKind::violation, "conjecture", inst, t, prof,
                         nlohmann::json::array({cj}));
                if (cj.detail.value("equality", false)) {
                    ++sum_.conjecture_equality;
                    if (job_.goal == ScanGoal::hunt_conjecture_violation)
                        emit(FindingKind::conjecture_equality, "conjecture", inst, t, prof,
                             nlohmann::json::array({cj}));
                }
            }
        }
    }

    void run_tightness(const Instance& inst) {
        const GroupSet& a = inst.a;
        const GroupSet& b = inst.b;
        RepProfile prof = rep_profile(a, b);
        const int t_hi = std::min({job_.t_max, a.size(), b.size()});
        for (int t = job_.t_min; t <= t_hi; ++t) {
            const long long tt = t;
            long long boundary = tt * (a.size() + b.size()) + threshold_new(t);
            ++sum_.checks;
            if (prof.popular_sum(t) != boundary) {
                ++sum_.hypothesis_not_met;
                continue;
            }
            if (!witness_exists_exhaustive(a, b, t)) {
                ++sum_.violated;
                emit(FindingKind::tightness, "tightness", inst, t, prof, nullptr);
            } else {
                ++sum_.holds;
            }
        }
    }

    const JobCtx& ctx_;
    const ScanJob& job_;
    ScanSummary& sum_;
    std::vector<Finding>& out_;
    long long idx_ = 0;
    int ordinal_ = 0;
};

}  // namespace

const char* finding_kind_name(FindingKind k) {
    switch (k) {
        case FindingKind::violation: return "violation";
        case FindingKind::tightness: return "tightness";
        case FindingKind::conjecture_equality: return "conjecture_equality";
        case FindingKind::formula_discrepancy: return "formula_discrepancy";
    }
    return "?";
}

FindingKind finding_kind_from_name(const std::string& s) {
    if (s == "violation") return FindingKind::violation;
    if (s == "tightness") return FindingKind::tightness;
    if (s == "conjecture_equality") return FindingKind::conjecture_equality;
    if (s == "formula_discrepancy") return FindingKind::formula_discrepancy;
    throw std::invalid_argument("unknown finding kind: " + s);
}

ScanSummary& ScanSummary::operator+=(const ScanSummary& o) {
    pairs_total += o.pairs_total;
    pairs_checked += o.pairs_checked;
    checks += o.checks;
    holds += o.holds;
    violated += o.violated;
    hypothesis_not_met += o.hypothesis_not_met;
    hypothesis_met += o.hypothesis_met;
    witnesses_found += o.witnesses_found;
    no_witness += o.no_witness;
    conjecture_checked += o.conjecture_checked;
    conjecture_equality += o.conjecture_equality;
    findings += o.findings;
    return *this;
}

long long scan_instance_count(const ScanJob& job) { return prepare(job).total; }

std::uint64_t scan_job_hash(const ScanJob& job) {
    ScanJob identity = job;
    identity.cursor = 0;
    identity.limit = -1;
    identity.workers = 1;
    std::string dump = nlohmann::json(identity).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (char c : dump) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

ScanResult scan(const ScanJob& job) {
    JobCtx ctx = prepare(job);
    const long long lo = std::clamp<long long>(job.cursor, 0, ctx.total);
    const long long hi = job.limit < 0 ? ctx.total : std::min(ctx.total, lo + job.limit);

    const int workers = std::max(1, std::min<int>(job.workers, 64));
    std::vector<ScanSummary> sums(workers);
    std::vector<std::vector<Finding>> finds(workers);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](int w) {
        try {
            const long long span = hi - lo;
            const long long chunk = (span + workers - 1) / workers;
            const long long wlo = lo + w * chunk;
            const long long whi = std::min(hi, wlo + chunk);
            InstanceRunner runner(ctx, sums[w], finds[w]);
            for (long long idx = wlo; idx < whi; ++idx) runner.run(idx);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    ScanResult result;
    result.end_cursor = hi;
    result.total_instances = ctx.total;
    for (int w = 0; w < workers; ++w) {
        result.summary += sums[w];
        // Chunks are contiguous and ascending, so plain concatenation keeps
        // findings sorted by (instance_index, ordinal).
        result.findings.insert(result.findings.end(),
                               std::make_move_iterator(finds[w].begin()),
                               std::make_move_iterator(finds[w].end()));
    }
    return result;
}

std::vector<Finding> hunt_tightness(const std::vector<std::string>& groups, int t,
                                    int exhaustive_cap) {
    if (t < 2 || t > 4)
        throw std::invalid_argument("tightness hunting is defined for t in [2, 4]");
    ScanJob job;
    job.groups = groups;
    job.t_min = t;
    job.t_max = t;
    job.mode = ScanMode::exhaustive;
    job.goal = ScanGoal::hunt_tightness;
    job.exhaustive_cap = exhaustive_cap;
    if (groups.empty()) return {};
    return scan(job).findings;
}

}  // namespace popsum
