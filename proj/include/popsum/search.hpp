// Exhaustive and randomized scanning over (group, A, B, t) space: verify the
// bound corpus instance-by-instance, hunt threshold-equality tightness cases,
// and stress the popular-sum conjecture.  Deterministic given (job, seed)
// regardless of worker count; instance indices are random-access so a job can
// be split at any cursor and merged back losslessly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "popsum/theorems.hpp"

namespace popsum {

enum class ScanMode { exhaustive, random };
enum class ScanGoal { verify_all, hunt_tightness, hunt_conjecture_violation };

struct ScanJob {
    std::vector<std::string> groups;  // group spec strings
    int t_min = 2;
    int t_max = 2;
    ScanMode mode = ScanMode::exhaustive;
    ScanGoal goal = ScanGoal::verify_all;
    std::uint64_t seed = 0;       // random mode
    long long samples = 0;        // random mode
    bool normalize = true;        // exhaustive mode: require 0 in A and in B
    int min_size = 0;             // |A|, |B| lower bound (in addition to t)
    int max_size = -1;            // -1 = unbounded
    long long cursor = 0;         // first instance index to process
    long long limit = -1;         // how many instances to process; -1 = rest
    int exhaustive_cap = 12;      // largest |G| allowed in exhaustive mode
    int workers = 1;

    bool operator==(const ScanJob&) const = default;
};

enum class FindingKind { violation, tightness, conjecture_equality, formula_discrepancy };

const char* finding_kind_name(FindingKind k);
FindingKind finding_kind_from_name(const std::string& s);

struct Finding {
    FindingKind kind = FindingKind::violation;
    std::string check;  // which checker or clause fired
    std::string group;
    std::vector<Element> A, B;
    int t = 0;
    std::uint64_t seed = 0;
    long long instance_index = -1;
    int ordinal = 0;              // emission order within the instance
    std::vector<int> rep_counts;  // replay profile
    nlohmann::json reports;       // attached reports (array)

    bool operator==(const Finding&) const = default;
};

struct ScanSummary {
    long long pairs_total = 0;    // instance indices consumed
    long long pairs_checked = 0;  // instances that passed the filters
    long long checks = 0;
    long long holds = 0;
    long long violated = 0;
    long long hypothesis_not_met = 0;
    long long hypothesis_met = 0;  // structure-bound hypothesis fired
    long long witnesses_found = 0;
    long long no_witness = 0;
    long long conjecture_checked = 0;
    long long conjecture_equality = 0;
    long long findings = 0;

    ScanSummary& operator+=(const ScanSummary& o);
    bool operator==(const ScanSummary&) const = default;
};

struct ScanResult {
    std::vector<Finding> findings;  // sorted by (instance_index, ordinal)
    ScanSummary summary;
    long long end_cursor = 0;
    long long total_instances = 0;
};

// Total number of instance indices the job enumerates (before cursor/limit).
long long scan_instance_count(const ScanJob& job);

// FNV-1a over the canonical job serialization, cursor/limit/workers excluded;
// checkpoint files use it to refuse mismatched resumes.
std::uint64_t scan_job_hash(const ScanJob& job);

ScanResult scan(const ScanJob& job);

// Threshold-equality instances where the exhaustive as-is search proves no
// structural witness exists.  t must lie in [2, 4].
std::vector<Finding> hunt_tightness(const std::vector<std::string>& groups, int t,
                                    int exhaustive_cap = 12);

}  // namespace popsum
