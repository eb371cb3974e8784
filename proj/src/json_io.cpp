#include "popsum/json_io.hpp"

namespace popsum {

using nlohmann::json;

namespace {

void put_number(json& j, const char* key, double value, bool real_valued) {
    if (real_valued)
        j[key] = value;
    else
        j[key] = static_cast<long long>(value);
}

}  // namespace

void to_json(json& j, const WitnessClauses& c) {
    j = json{{"removal_bound", c.removal_bound},
             {"popular_eq", c.popular_eq},
             {"target_eq", c.target_eq},
             {"size_a", c.size_a},
             {"size_b", c.size_b},
             {"small_sumset", c.small_sumset},
             {"chain_first", c.chain_first},
             {"chain_second", c.chain_second}};
}

void from_json(const json& j, WitnessClauses& c) {
    j.at("removal_bound").get_to(c.removal_bound);
    j.at("popular_eq").get_to(c.popular_eq);
    j.at("target_eq").get_to(c.target_eq);
    j.at("size_a").get_to(c.size_a);
    j.at("size_b").get_to(c.size_b);
    j.at("small_sumset").get_to(c.small_sumset);
    j.at("chain_first").get_to(c.chain_first);
    j.at("chain_second").get_to(c.chain_second);
}

void to_json(json& j, const WitnessReport& r) {
    j = json{{"schema", kSchemaVersion},
             {"group", r.group},
             {"A", r.A},
             {"B", r.B},
             {"t", r.t},
             {"A_prime", r.A_prime},
             {"B_prime", r.B_prime},
             {"H", r.H},
             {"ell", r.ell},
             {"rho", r.rho},
             {"popular_sum", r.popular_sum},
             {"clauses", r.clauses},
             {"valid", r.valid}};
}

void from_json(const json& j, WitnessReport& r) {
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("t").get_to(r.t);
    j.at("A_prime").get_to(r.A_prime);
    j.at("B_prime").get_to(r.B_prime);
    j.at("H").get_to(r.H);
    j.at("ell").get_to(r.ell);
    j.at("rho").get_to(r.rho);
    j.at("popular_sum").get_to(r.popular_sum);
    j.at("clauses").get_to(r.clauses);
    j.at("valid").get_to(r.valid);
}

void to_json(json& j, const NoWitness& r) {
    j = json{{"schema", kSchemaVersion}, {"finding_kind", "violation"},
             {"group", r.group},         {"A", r.A},
             {"B", r.B},                 {"t", r.t},
             {"rep_counts", r.rep_counts}};
}

void from_json(const json& j, NoWitness& r) {
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("t").get_to(r.t);
    j.at("rep_counts").get_to(r.rep_counts);
}

void to_json(json& j, const BoundReport& r) {
    j = json{{"schema", kSchemaVersion},
             {"theorem", r.theorem},
             {"group", r.group},
             {"A", r.A},
             {"B", r.B},
             {"t", r.t},
             {"verdict", verdict_name(r.verdict)},
             {"anchor", r.anchor}};
    put_number(j, "lhs", r.lhs, false);
    put_number(j, "rhs", r.rhs, r.real_valued);
    if (!r.H.empty()) j["H"] = r.H;
    if (r.witness) j["witness"] = *r.witness;
    if (!r.detail.is_null() && !r.detail.empty()) j["detail"] = r.detail;
}

void from_json(const json& j, BoundReport& r) {
    j.at("theorem").get_to(r.theorem);
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("t").get_to(r.t);
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    j.at("anchor").get_to(r.anchor);
    r.lhs = j.at("lhs").get<double>();
    r.rhs = j.at("rhs").get<double>();
    r.real_valued = j.at("rhs").is_number_float();
    r.H = j.value("H", std::vector<Element>{});
    if (j.contains("witness")) r.witness = j.at("witness").get<WitnessReport>();
    else r.witness.reset();
    r.detail = j.value("detail", json());
}

void to_json(json& j, const MainPropItem& r) {
    j = json{{"item", r.item}, {"applicable", r.applicable}, {"holds", r.holds},
             {"note", r.note}};
}

void from_json(const json& j, MainPropItem& r) {
    j.at("item").get_to(r.item);
    j.at("applicable").get_to(r.applicable);
    j.at("holds").get_to(r.holds);
    j.at("note").get_to(r.note);
}

void to_json(json& j, const MainPropReport& r) {
    j = json{{"schema", kSchemaVersion},
             {"theorem", "mainprop"},
             {"group", r.group},
             {"A", r.A},
             {"B", r.B},
             {"A2", r.A2},
             {"B2", r.B2},
             {"H", r.H},
             {"t", r.t},
             {"alpha", r.alpha},
             {"ell", r.ell},
             {"rho", r.rho},
             {"verdict", verdict_name(r.verdict)},
             {"items", r.items}};
}

void from_json(const json& j, MainPropReport& r) {
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("A2").get_to(r.A2);
    j.at("B2").get_to(r.B2);
    j.at("H").get_to(r.H);
    j.at("t").get_to(r.t);
    j.at("alpha").get_to(r.alpha);
    j.at("ell").get_to(r.ell);
    j.at("rho").get_to(r.rho);
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    j.at("items").get_to(r.items);
}

void to_json(json& j, const ConstructionResult& r) {
    j = json{{"schema", kSchemaVersion},
             {"family", r.family},
             {"group", r.group},
             {"H", r.H},
             {"s", r.s},
             {"u", r.u},
             {"t", r.t},
             {"nA", r.nA},
             {"nB", r.nB},
             {"A0", r.A0},
             {"B0", r.B0},
             {"A", r.A},
             {"B", r.B},
             {"predicted_sum", r.predicted_sum},
             {"direct_sum", r.direct_sum},
             {"matches", r.matches}};
    if (r.printed_alternative) j["printed_alternative"] = *r.printed_alternative;
    if (!r.note.empty()) j["note"] = r.note;
}

void from_json(const json& j, ConstructionResult& r) {
    j.at("family").get_to(r.family);
    j.at("group").get_to(r.group);
    j.at("H").get_to(r.H);
    j.at("s").get_to(r.s);
    j.at("u").get_to(r.u);
    j.at("t").get_to(r.t);
    j.at("nA").get_to(r.nA);
    j.at("nB").get_to(r.nB);
    j.at("A0").get_to(r.A0);
    j.at("B0").get_to(r.B0);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("predicted_sum").get_to(r.predicted_sum);
    j.at("direct_sum").get_to(r.direct_sum);
    j.at("matches").get_to(r.matches);
    if (j.contains("printed_alternative"))
        r.printed_alternative = j.at("printed_alternative").get<long long>();
    else
        r.printed_alternative.reset();
    r.note = j.value("note", std::string());
}

void to_json(json& j, const RestrictedReport& r) {
    j = json{{"schema", kSchemaVersion},
             {"theorem", "restricted"},
             {"group", r.group},
             {"A", r.A},
             {"B", r.B},
             {"tau", r.tau},
             {"restricted", r.restricted},
             {"lhs", r.restricted_size},
             {"tau_size", r.tau_size},
             {"M", r.M},
             {"lev_rhs", r.lev_rhs},
             {"new_rhs", r.new_rhs},
             {"lev_holds", r.lev_holds},
             {"new_holds", r.new_holds},
             {"verdict", verdict_name(r.verdict)}};
}

void from_json(const json& j, RestrictedReport& r) {
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("tau").get_to(r.tau);
    j.at("restricted").get_to(r.restricted);
    j.at("lhs").get_to(r.restricted_size);
    j.at("tau_size").get_to(r.tau_size);
    j.at("M").get_to(r.M);
    j.at("lev_rhs").get_to(r.lev_rhs);
    j.at("new_rhs").get_to(r.new_rhs);
    j.at("lev_holds").get_to(r.lev_holds);
    j.at("new_holds").get_to(r.new_holds);
    r.verdict = verdict_from_name(j.at("verdict").get<std::string>());
}

void to_json(json& j, const Finding& r) {
    j = json{{"schema", kSchemaVersion},
             {"finding_kind", finding_kind_name(r.kind)},
             {"check", r.check},
             {"group", r.group},
             {"A", r.A},
             {"B", r.B},
             {"t", r.t},
             {"seed", r.seed},
             {"instance_index", r.instance_index},
             {"ordinal", r.ordinal},
             {"rep_counts", r.rep_counts},
             {"reports", r.reports}};
}

void from_json(const json& j, Finding& r) {
    r.kind = finding_kind_from_name(j.at("finding_kind").get<std::string>());
    j.at("check").get_to(r.check);
    j.at("group").get_to(r.group);
    j.at("A").get_to(r.A);
    j.at("B").get_to(r.B);
    j.at("t").get_to(r.t);
    j.at("seed").get_to(r.seed);
    j.at("instance_index").get_to(r.instance_index);
    j.at("ordinal").get_to(r.ordinal);
    j.at("rep_counts").get_to(r.rep_counts);
    r.reports = j.at("reports");
}

void to_json(json& j, const ScanJob& r) {
    j = json{{"schema", kSchemaVersion},
             {"groups", r.groups},
             {"t_min", r.t_min},
             {"t_max", r.t_max},
             {"mode", r.mode == ScanMode::exhaustive ? "exhaustive" : "random"},
             {"goal", r.goal == ScanGoal::verify_all          ? "verify_all"
                      : r.goal == ScanGoal::hunt_tightness    ? "hunt_tightness"
                                                              : "hunt_conjecture_violation"},
             {"seed", r.seed},
             {"samples", r.samples},
             {"normalize", r.normalize},
             {"min_size", r.min_size},
             {"max_size", r.max_size},
             {"cursor", r.cursor},
             {"limit", r.limit},
             {"exhaustive_cap", r.exhaustive_cap},
             {"workers", r.workers}};
}

void from_json(const json& j, ScanJob& r) {
    j.at("groups").get_to(r.groups);
    j.at("t_min").get_to(r.t_min);
    j.at("t_max").get_to(r.t_max);
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "exhaustive") r.mode = ScanMode::exhaustive;
    else if (mode == "random") r.mode = ScanMode::random;
    else throw std::invalid_argument("unknown scan mode: " + mode);
    std::string goal = j.at("goal").get<std::string>();
    if (goal == "verify_all") r.goal = ScanGoal::verify_all;
    else if (goal == "hunt_tightness") r.goal = ScanGoal::hunt_tightness;
    else if (goal == "hunt_conjecture_violation") r.goal = ScanGoal::hunt_conjecture_violation;
    else throw std::invalid_argument("unknown scan goal: " + goal);
    j.at("seed").get_to(r.seed);
    j.at("samples").get_to(r.samples);
    j.at("normalize").get_to(r.normalize);
    j.at("min_size").get_to(r.min_size);
    j.at("max_size").get_to(r.max_size);
    j.at("cursor").get_to(r.cursor);
    j.at("limit").get_to(r.limit);
    j.at("exhaustive_cap").get_to(r.exhaustive_cap);
    j.at("workers").get_to(r.workers);
}

void to_json(json& j, const ScanSummary& r) {
    j = json{{"schema", kSchemaVersion},
             {"pairs_total", r.pairs_total},
             {"pairs_checked", r.pairs_checked},
             {"checks", r.checks},
             {"holds", r.holds},
             {"violated", r.violated},
             {"hypothesis_not_met", r.hypothesis_not_met},
             {"hypothesis_met", r.hypothesis_met},
             {"witnesses_found", r.witnesses_found},
             {"no_witness", r.no_witness},
             {"conjecture_checked", r.conjecture_checked},
             {"conjecture_equality", r.conjecture_equality},
             {"findings", r.findings}};
}

void from_json(const json& j, ScanSummary& r) {
    j.at("pairs_total").get_to(r.pairs_total);
    j.at("pairs_checked").get_to(r.pairs_checked);
    j.at("checks").get_to(r.checks);
    j.at("holds").get_to(r.holds);
    j.at("violated").get_to(r.violated);
    j.at("hypothesis_not_met").get_to(r.hypothesis_not_met);
    j.at("hypothesis_met").get_to(r.hypothesis_met);
    j.at("witnesses_found").get_to(r.witnesses_found);
    j.at("no_witness").get_to(r.no_witness);
    j.at("conjecture_checked").get_to(r.conjecture_checked);
    j.at("conjecture_equality").get_to(r.conjecture_equality);
    j.at("findings").get_to(r.findings);
}

}  // namespace popsum
