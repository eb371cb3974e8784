#include "popsum/subgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace popsum {

Subgroup Subgroup::trivial(const FiniteAbelianGroup& g) {
    return Subgroup{GroupSet::singleton(g, 0), 1};
}

Subgroup Subgroup::whole(const FiniteAbelianGroup& g) {
    return Subgroup{GroupSet::full(g), g.order()};
}

Subgroup Subgroup::from_set(GroupSet members) {
    const FiniteAbelianGroup& g = members.group();
    if (!members.test(0)) throw std::invalid_argument("subgroup must contain 0");
    bool closed = true;
    members.for_each([&](Element a) {
        if (!members.test(g.neg(a))) closed = false;
        members.for_each([&](Element b) {
            if (!members.test(g.add(a, b))) closed = false;
        });
    });
    if (!closed) throw std::invalid_argument("set is not closed under the group operation");
    if (g.order() % members.size() != 0)
        throw std::invalid_argument("subgroup order does not divide group order");
    int n = members.size();
    return Subgroup{std::move(members), n};
}

Subgroup subgroup_generated(const FiniteAbelianGroup& g, const std::vector<Element>& gens) {
    GroupSet closure = GroupSet::singleton(g, 0);
    // Iterate S <- S + gen until stable; in a finite group the generated
    // submonoid is the generated subgroup.
    bool grew = true;
    while (grew) {
        grew = false;
        for (Element x : gens) {
            GroupSet next = closure | closure.translated(x);
            if (next.size() != closure.size()) {
                closure = std::move(next);
                grew = true;
            }
        }
    }
    return Subgroup{closure, closure.size()};
}

Subgroup subgroup_generated(const FiniteAbelianGroup& g, const GroupSet& gens) {
    return subgroup_generated(g, gens.elements());
}

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, int order_limit) {
    if (g.order() > order_limit)
        throw std::length_error("group order exceeds subgroup enumeration limit");

    std::set<std::vector<std::uint64_t>> seen;
    std::vector<GroupSet> found;
    std::vector<GroupSet> frontier;

    GroupSet triv = GroupSet::singleton(g, 0);
    seen.insert(triv.words());
    found.push_back(triv);
    frontier.push_back(triv);

    while (!frontier.empty()) {
        std::vector<GroupSet> next;
        for (const GroupSet& h : frontier) {
            for (Element x = 0; x < g.order(); ++x) {
                if (h.test(x)) continue;
                std::vector<Element> gens = h.elements();
                gens.push_back(x);
                GroupSet k = subgroup_generated(g, gens).members;
                if (seen.insert(k.words()).second) {
                    found.push_back(k);
                    next.push_back(k);
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (GroupSet& s : found) {
        int n = s.size();
        out.push_back(Subgroup{std::move(s), n});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order != b.order) return a.order < b.order;
        return a.members.bits_less(b.members);
    });
    return out;
}

QuotientMap::QuotientMap(const FiniteAbelianGroup& g, const Subgroup& k) : group_(&g) {
    if (k.group() != g) throw std::invalid_argument("subgroup of a different group");
    ids_.assign(g.order(), -1);
    for (Element e = 0; e < g.order(); ++e) {
        if (ids_[e] >= 0) continue;
        int id = count_++;
        reps_.push_back(e);
        k.members.for_each([&](Element h) { ids_[g.add(e, h)] = id; });
    }
}

int QuotientMap::add_ids(int a, int b) const {
    return ids_[group_->add(reps_[a], reps_[b])];
}

int quotient_map(const FiniteAbelianGroup& g, const Subgroup& k, Element e) {
    return QuotientMap(g, k)(e);
}

}  // namespace popsum
