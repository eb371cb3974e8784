#include "popsum/restricted.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace popsum {

namespace {
constexpr double kGuard = 1e-9;  // integer lhs vs binary64 rhs guard band
}

TauMap::TauMap(GroupSet domain, std::vector<Element> images) : domain_(std::move(domain)) {
    std::vector<Element> elems = domain_.elements();
    if (images.size() != elems.size())
        throw std::invalid_argument("tau needs exactly one image per domain element");
    const FiniteAbelianGroup& g = domain_.group();
    image_by_element_.assign(g.order(), -1);
    GroupSet seen(g);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Element img = images[i];
        if (img < 0 || img >= g.order()) throw std::out_of_range("tau image outside group");
        if (seen.test(img)) throw std::invalid_argument("tau must be injective");
        seen.add(img);
        image_by_element_[elems[i]] = img;
    }
}

TauMap TauMap::identity(const GroupSet& domain) {
    return TauMap(domain, domain.elements());
}

TauMap TauMap::from_pairs(const GroupSet& domain,
                          const std::vector<std::pair<Element, Element>>& pairs) {
    std::vector<Element> elems = domain.elements();
    std::vector<Element> images(elems.size(), -1);
    if (pairs.size() != elems.size())
        throw std::invalid_argument("tau pair list must cover the domain exactly");
    for (const auto& [a, img] : pairs) {
        auto it = std::lower_bound(elems.begin(), elems.end(), a);
        if (it == elems.end() || *it != a)
            throw std::invalid_argument("tau pair references an element outside A");
        Element& slot = images[it - elems.begin()];
        if (slot != -1) throw std::invalid_argument("tau pair list repeats a domain element");
        slot = img;
    }
    return TauMap(domain, images);
}

TauMap TauMap::random(const GroupSet& domain, std::mt19937_64& rng) {
    const FiniteAbelianGroup& g = domain.group();
    std::vector<Element> pool(g.order());
    for (Element e = 0; e < g.order(); ++e) pool[e] = e;
    // Partial Fisher-Yates: the first |A| entries become the images.
    std::vector<Element> images(domain.size());
    for (int i = 0; i < domain.size(); ++i) {
        std::uniform_int_distribution<int> dist(i, g.order() - 1);
        std::swap(pool[i], pool[dist(rng)]);
        images[i] = pool[i];
    }
    return TauMap(domain, images);
}

Element TauMap::operator()(Element a) const {
    if (a < 0 || a >= static_cast<Element>(image_by_element_.size()) ||
        image_by_element_[a] < 0)
        throw std::out_of_range("tau applied outside its domain");
    return image_by_element_[a];
}

std::vector<std::pair<Element, Element>> TauMap::pairs() const {
    std::vector<std::pair<Element, Element>> out;
    out.reserve(domain_.size());
    domain_.for_each([&](Element a) { out.emplace_back(a, image_by_element_[a]); });
    return out;
}

GroupSet restricted_sumset(const GroupSet& a, const GroupSet& b, const TauMap& tau) {
    require_same_group(a, b);
    if (tau.domain() != a) throw std::invalid_argument("tau domain must equal A");
    const FiniteAbelianGroup& g = a.group();
    GroupSet out(g);
    a.for_each([&](Element x) {
        Element forbidden = tau(x);
        b.for_each([&](Element y) {
            if (y != forbidden) out.add(g.add(x, y));
        });
    });
    return out;
}

int tau_size(const GroupSet& a, const GroupSet& b, const TauMap& tau) {
    require_same_group(a, b);
    if (tau.domain() != a) throw std::invalid_argument("tau domain must equal A");
    int count = 0;
    a.for_each([&](Element x) {
        if (b.test(tau(x))) ++count;
    });
    return count;
}

double lev_bound(int n) {
    if (n < 1) throw std::invalid_argument("group order must be >= 1");
    return n - std::sqrt(static_cast<double>(n)) - 0.5;
}

double new_bound(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("arguments must be >= 1");
    return n + (1.0 - 4.0 * std::sqrt(3.0 * m)) / 3.0;
}

double crossover_threshold(int n) {
    if (n < 1) throw std::invalid_argument("group order must be >= 1");
    return 3.0 / 16.0 * n + 5.0 / 16.0 * std::sqrt(static_cast<double>(n)) + 25.0 / 192.0;
}

RestrictedReport check_restricted(const GroupSet& a, const GroupSet& b, const TauMap& tau) {
    require_same_group(a, b);
    const FiniteAbelianGroup& g = a.group();
    RestrictedReport r;
    r.group = g.spec();
    r.A = a.elements();
    r.B = b.elements();
    r.tau = tau.pairs();
    r.M = std::min(a.size(), b.size());
    if (a.size() + b.size() < g.order() + 1) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    if (sumset(a, b) != GroupSet::full(g))
        throw std::logic_error("A+B must equal G under the size hypothesis");

    GroupSet rs = restricted_sumset(a, b, tau);
    r.restricted = rs.elements();
    r.restricted_size = rs.size();
    r.tau_size = popsum::tau_size(a, b, tau);
    r.lev_rhs = lev_bound(g.order());
    r.new_rhs = new_bound(g.order(), r.M);
    r.lev_holds = r.restricted_size > r.lev_rhs - kGuard;
    r.new_holds = r.restricted_size >= r.new_rhs - kGuard;
    r.verdict = r.lev_holds && r.new_holds ? Verdict::holds : Verdict::violated;
    return r;
}

}  // namespace popsum
