// popsum: exact checks, scans, constructions, and restricted-sumset reports
// for t-popular sumsets over finite abelian groups.
//
// Exit codes: 0 = holds/clean, 1 = usage or resource error, 2 = violated
// (findings emitted), 3 = hypothesis not met.  stdout carries pure JSON /
// JSONL; diagnostics go to stderr.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "popsum/constructions.hpp"
#include "popsum/format.hpp"
#include "popsum/json_io.hpp"
#include "popsum/restricted.hpp"
#include "popsum/search.hpp"
#include "popsum/witness.hpp"

using nlohmann::json;

namespace {

int verdict_exit(popsum::Verdict v) {
    switch (v) {
        case popsum::Verdict::holds: return 0;
        case popsum::Verdict::violated: return 2;
        case popsum::Verdict::hypothesis_not_met: return 3;
    }
    return 1;
}

int default_workers() {
    if (const char* env = std::getenv("POPSUM_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct CheckArgs {
    std::string group, a, b, theorem;
    std::string a_prime, b_prime;
    int t = 2;
    double alpha = 0.0;
};

int run_check(const CheckArgs& args) {
    popsum::FiniteAbelianGroup g = popsum::parse_group(args.group);
    popsum::GroupSet a = popsum::parse_set(g, args.a);
    popsum::GroupSet b = popsum::parse_set(g, args.b);

    if (args.theorem == "pollard") {
        popsum::BoundReport rep = popsum::check_pollard(a, b, args.t);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "kneser") {
        popsum::BoundReport rep = popsum::check_kneser(a, b);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "cd") {
        popsum::BoundReport rep = popsum::check_cauchy_davenport(a, b);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "hs") {
        popsum::BoundReport rep = popsum::check_hamidoune_serra(a, b, args.t);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "new") {
        popsum::BoundReport rep = popsum::check_theorem_new(a, b, args.t);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "mainprop") {
        popsum::GroupSet ap = args.a_prime.empty() ? a : popsum::parse_set(g, args.a_prime);
        popsum::GroupSet bp = args.b_prime.empty() ? b : popsum::parse_set(g, args.b_prime);
        popsum::MainPropReport rep =
            popsum::check_mainprop_items(a, b, args.t, ap, bp, args.alpha);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "conjecture") {
        popsum::ConjectureParams params = popsum::conjecture_params(a, b, args.t);
        auto witness = popsum::search_conclusion_witness(a, b, params.u);
        popsum::BoundReport rep = popsum::check_conjecture(a, b, args.t, witness);
        std::cout << json(rep).dump() << "\n";
        return verdict_exit(rep.verdict);
    }
    if (args.theorem == "witness") {
        popsum::FindWitnessOutcome out = popsum::find_witness(a, b, args.t);
        if (out.witness) {
            std::cout << json(*out.witness).dump() << "\n";
            return out.witness->valid ? 0 : 2;
        }
        std::cout << json(*out.counterexample).dump() << "\n";
        return 2;
    }
    throw CLI::ValidationError("--theorem",
                               "expected pollard|kneser|cd|hs|new|mainprop|conjecture|witness");
}

struct ScanArgs {
    std::string groups;
    std::string t_range = "2";
    std::string mode = "exhaustive";
    std::string goal = "verify_all";
    std::uint64_t seed = 0;
    long long samples = 0;
    bool no_normalize = false;
    int min_size = 0;
    int max_size = -1;
    long long cursor = 0;
    long long limit = -1;
    int cap = 12;
    int workers = default_workers();
    std::string out_path;
    std::string checkpoint_path;
    bool resume = false;
};

popsum::ScanJob job_from_args(const ScanArgs& args) {
    popsum::ScanJob job;
    job.groups = popsum::expand_group_list(args.groups);
    std::size_t dots = args.t_range.find("..");
    if (dots == std::string::npos) {
        job.t_min = job.t_max = std::stoi(args.t_range);
    } else {
        job.t_min = std::stoi(args.t_range.substr(0, dots));
        job.t_max = std::stoi(args.t_range.substr(dots + 2));
    }
    if (args.mode == "exhaustive") job.mode = popsum::ScanMode::exhaustive;
    else if (args.mode == "random") job.mode = popsum::ScanMode::random;
    else throw CLI::ValidationError("--mode", "expected exhaustive|random");
    if (args.goal == "verify_all") job.goal = popsum::ScanGoal::verify_all;
    else if (args.goal == "hunt_tightness") job.goal = popsum::ScanGoal::hunt_tightness;
    else if (args.goal == "hunt_conjecture_violation")
        job.goal = popsum::ScanGoal::hunt_conjecture_violation;
    else throw CLI::ValidationError(
        "--goal", "expected verify_all|hunt_tightness|hunt_conjecture_violation");
    job.seed = args.seed;
    job.samples = args.samples;
    job.normalize = !args.no_normalize;
    job.min_size = args.min_size;
    job.max_size = args.max_size;
    job.cursor = args.cursor;
    job.limit = args.limit;
    job.exhaustive_cap = args.cap;
    job.workers = args.workers;
    return job;
}

int run_scan(const ScanArgs& args) {
    popsum::ScanJob job = job_from_args(args);

    if (args.resume) {
        if (args.checkpoint_path.empty())
            throw CLI::ValidationError("--resume", "needs --checkpoint");
        std::ifstream in(args.checkpoint_path);
        if (in) {
            json ck = json::parse(in);
            if (ck.at("job_hash").get<std::uint64_t>() != popsum::scan_job_hash(job))
                throw CLI::ValidationError("--resume", "checkpoint belongs to a different job");
            job.cursor = ck.at("cursor").get<long long>();
        }
    }

    popsum::ScanResult result = popsum::scan(job);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw CLI::ValidationError("--out", "cannot open output file");
        out = &file;
    }
    for (const popsum::Finding& f : result.findings) *out << json(f).dump() << "\n";
    json summary;
    summary["schema"] = popsum::kSchemaVersion;
    summary["summary"] = result.summary;
    summary["end_cursor"] = result.end_cursor;
    summary["total_instances"] = result.total_instances;
    *out << summary.dump() << "\n";

    if (!args.checkpoint_path.empty()) {
        json ck;
        ck["schema"] = popsum::kSchemaVersion;
        ck["job_hash"] = popsum::scan_job_hash(job);
        ck["cursor"] = result.end_cursor;
        std::ofstream ckout(args.checkpoint_path);
        ckout << ck.dump() << "\n";
    }

    for (const popsum::Finding& f : result.findings)
        if (f.kind == popsum::FindingKind::violation) return 2;
    return 0;
}

struct ConstructArgs {
    std::string family, group, h;
    int s = 1, u = 1, t = 2, n_a = 1, n_b = 1;
    std::string a0, b0;
    bool inner_auto = false;
};

int run_construct(const ConstructArgs& args) {
    popsum::FiniteAbelianGroup g = popsum::parse_group(args.group);
    popsum::Subgroup h = popsum::Subgroup::from_set(popsum::parse_set(g, args.h));

    popsum::ConstructionResult res;
    if (args.family == "minus_self") {
        res = popsum::gen_minus_self(g, h, args.s, args.u);
    } else if (args.family == "kneser_pair") {
        res = popsum::gen_kneser_pair(g, h, args.t, args.n_a, args.n_b);
    } else if (args.family == "ap_cosets") {
        res = popsum::gen_ap_cosets(g, h, args.s, args.u, args.n_a, args.n_b);
    } else if (args.family == "recursive_1" || args.family == "recursive_2") {
        popsum::GroupSet a0(g), b0(g);
        if (args.inner_auto) {
            int u = args.family == "recursive_1" ? args.u : args.t;
            auto inner = popsum::find_inner_pair(g, h, u);
            if (!inner) throw CLI::ValidationError("--inner-auto", "no valid inner pair exists");
            a0 = inner->first;
            b0 = inner->second;
        } else {
            if (args.a0.empty() || args.b0.empty())
                throw CLI::ValidationError("--A0/--B0", "recursive families need inner sets");
            a0 = popsum::parse_set(g, args.a0);
            b0 = popsum::parse_set(g, args.b0);
        }
        if (args.family == "recursive_1") {
            res = popsum::gen_recursive_1(g, h, args.s, args.u, a0, b0);
        } else {
            popsum::ConstructionResult base =
                popsum::gen_kneser_pair(g, h, args.t, args.n_a, args.n_b);
            res = popsum::gen_recursive_2(popsum::GroupSet::from_elements(g, base.A),
                                          popsum::GroupSet::from_elements(g, base.B), h, args.t,
                                          a0, b0);
        }
    } else {
        throw CLI::ValidationError(
            "--family", "expected minus_self|kneser_pair|ap_cosets|recursive_1|recursive_2");
    }

    std::cout << json(res).dump() << "\n";
    return res.matches ? 0 : 2;
}

struct RestrictedArgs {
    std::string group, a, b;
    std::string tau = "identity";
    bool tau_random = false;
    long long samples = 1;
    std::uint64_t seed = 0;
};

int run_restricted(const RestrictedArgs& args) {
    popsum::FiniteAbelianGroup g = popsum::parse_group(args.group);
    popsum::GroupSet a = popsum::parse_set(g, args.a);
    popsum::GroupSet b = popsum::parse_set(g, args.b);

    int worst = 0;
    if (args.tau_random) {
        std::mt19937_64 rng(args.seed);
        for (long long i = 0; i < args.samples; ++i) {
            popsum::TauMap tau = popsum::TauMap::random(a, rng);
            popsum::RestrictedReport rep = popsum::check_restricted(a, b, tau);
            std::cout << json(rep).dump() << "\n";
            worst = std::max(worst, verdict_exit(rep.verdict));
        }
        return worst;
    }
    popsum::TauMap tau = args.tau == "identity"
                             ? popsum::TauMap::identity(a)
                             : popsum::TauMap::from_pairs(a, popsum::parse_tau_pairs(args.tau));
    popsum::RestrictedReport rep = popsum::check_restricted(a, b, tau);
    std::cout << json(rep).dump() << "\n";
    return verdict_exit(rep.verdict);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-popular sumset engine over finite abelian groups"};
    app.require_subcommand(1);

    CheckArgs check;
    CLI::App* c = app.add_subcommand("check", "run one bound checker on one instance");
    c->add_option("--group", check.group, "group spec, e.g. Z12 or Z4xZ2")->required();
    c->add_option("--A", check.a, "set literal {..} or 0x bitmask")->required();
    c->add_option("--B", check.b, "set literal {..} or 0x bitmask")->required();
    c->add_option("--t", check.t, "popularity threshold");
    c->add_option("--theorem", check.theorem,
                  "pollard|kneser|cd|hs|new|mainprop|conjecture|witness")
        ->required();
    c->add_option("--A-prime", check.a_prime, "witness component for mainprop");
    c->add_option("--B-prime", check.b_prime, "witness component for mainprop");
    c->add_option("--alpha", check.alpha, "slack parameter for mainprop");

    ScanArgs scan_args;
    CLI::App* s = app.add_subcommand("scan", "scan (group, A, B, t) space");
    s->add_option("--groups", scan_args.groups, "comma list; ranges like Z2..Z10")->required();
    s->add_option("--t", scan_args.t_range, "t or t range like 2..3");
    s->add_option("--mode", scan_args.mode, "exhaustive|random");
    s->add_option("--goal", scan_args.goal,
                  "verify_all|hunt_tightness|hunt_conjecture_violation");
    s->add_option("--seed", scan_args.seed, "random-mode seed");
    s->add_option("--samples", scan_args.samples, "random-mode sample count");
    s->add_flag("--no-normalize", scan_args.no_normalize,
                "disable translation normalization (0 in A and B)");
    s->add_option("--min-size", scan_args.min_size, "minimum |A| and |B|");
    s->add_option("--max-size", scan_args.max_size, "maximum |A| and |B| (-1 = none)");
    s->add_option("--cursor", scan_args.cursor, "first instance index");
    s->add_option("--limit", scan_args.limit, "instance budget (-1 = all)");
    s->add_option("--cap", scan_args.cap, "exhaustive group-order cap");
    s->add_option("--workers", scan_args.workers, "worker threads (env POPSUM_WORKERS)");
    s->add_option("--out", scan_args.out_path, "write JSONL here instead of stdout");
    s->add_option("--checkpoint", scan_args.checkpoint_path, "checkpoint file");
    s->add_flag("--resume", scan_args.resume, "resume from --checkpoint");

    ConstructArgs con;
    CLI::App* k = app.add_subcommand("construct", "generate an extremal family instance");
    k->add_option("--family", con.family,
                  "minus_self|kneser_pair|ap_cosets|recursive_1|recursive_2")
        ->required();
    k->add_option("--group", con.group, "group spec")->required();
    k->add_option("--H", con.h, "subgroup members as a set literal")->required();
    k->add_option("--s", con.s, "coset multiplier");
    k->add_option("--u", con.u, "remainder with t = s|H|+u");
    k->add_option("--t", con.t, "popularity threshold (kneser_pair, recursive_2)");
    k->add_option("--nA", con.n_a, "cosets in A");
    k->add_option("--nB", con.n_b, "cosets in B");
    k->add_option("--A0", con.a0, "inner set for recursive families");
    k->add_option("--B0", con.b0, "inner set for recursive families");
    k->add_flag("--inner-auto", con.inner_auto, "find the smallest valid inner pair");

    RestrictedArgs res;
    CLI::App* r = app.add_subcommand("restricted", "restricted-sumset bounds");
    r->add_option("--group", res.group, "group spec")->required();
    r->add_option("--A", res.a, "set literal")->required();
    r->add_option("--B", res.b, "set literal")->required();
    r->add_option("--tau", res.tau, "identity or pair list a:b,c:d");
    r->add_flag("--tau-random", res.tau_random, "sample random injective deleters");
    r->add_option("--samples", res.samples, "number of random deleters");
    r->add_option("--seed", res.seed, "seed for --tau-random");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c) return run_check(check);
        if (*s) return run_scan(scan_args);
        if (*k) return run_construct(con);
        if (*r) return run_restricted(res);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
