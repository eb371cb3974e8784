// Restricted sumsets under an injective deleter map, with the two lower
// bounds and their crossover comparison.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "popsum/theorems.hpp"

namespace popsum {

// An injective map tau: A -> G, stored total on its domain.  Pairs whose
// image misses B simply delete nothing.
class TauMap {
public:
    // images[i] is the image of the i-th smallest element of `domain`.
    TauMap(GroupSet domain, std::vector<Element> images);
    static TauMap identity(const GroupSet& domain);
    static TauMap from_pairs(const GroupSet& domain,
                             const std::vector<std::pair<Element, Element>>& pairs);
    // Uniformly random injective image, deterministic in the engine state.
    static TauMap random(const GroupSet& domain, std::mt19937_64& rng);

    const GroupSet& domain() const { return domain_; }
    Element operator()(Element a) const;
    std::vector<std::pair<Element, Element>> pairs() const;

private:
    GroupSet domain_;
    std::vector<Element> image_by_element_;  // -1 outside the domain
};

// {a + b : a in A, b in B, b != tau(a)}.
GroupSet restricted_sumset(const GroupSet& a, const GroupSet& b, const TauMap& tau);

// |{(a, b) : a in A, b in B, tau(a) = b}|; at most min(|A|, |B|).
int tau_size(const GroupSet& a, const GroupSet& b, const TauMap& tau);

// n - sqrt(n) - 1/2 (strict lower bound).
double lev_bound(int n);

// n + (1 - 4*sqrt(3M)) / 3 (non-strict lower bound).
double new_bound(int n, int m);

// (3/16)n + (5/16)sqrt(n) + 25/192; the new bound beats the strict one when
// min(|A|, |B|) falls below this value.
double crossover_threshold(int n);

struct RestrictedReport {
    std::string group;
    std::vector<Element> A, B;
    std::vector<std::pair<Element, Element>> tau;
    std::vector<Element> restricted;
    int restricted_size = 0;
    int tau_size = 0;
    int M = 0;  // min(|A|, |B|)
    double lev_rhs = 0;
    double new_rhs = 0;
    bool lev_holds = false;
    bool new_holds = false;
    Verdict verdict = Verdict::hypothesis_not_met;

    bool operator==(const RestrictedReport&) const = default;
};

// Requires |A| + |B| >= |G| + 1 (hypothesis-not-met otherwise); asserts
// A + B = G before evaluating both bounds.
RestrictedReport check_restricted(const GroupSet& a, const GroupSet& b, const TauMap& tau);

}  // namespace popsum
