// Finite abelian group arithmetic over dense element indices.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace popsum {

// Elements are flat indices in [0, |G|-1] under mixed-radix encoding:
// component j of index g is (g / prod_{i>j} d_i) mod d_j.  The last factor
// varies fastest, so Z4xZ2 orders its elements (0,0),(0,1),(1,0),...
using Element = std::int32_t;

class FiniteAbelianGroup {
public:
    // moduli: cyclic factor sizes d_i >= 1, e.g. {12} or {4,2}.
    explicit FiniteAbelianGroup(std::vector<int> moduli);

    int order() const { return order_; }
    const std::vector<int>& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }

    Element zero() const { return 0; }
    Element add(Element g, Element h) const;
    Element neg(Element g) const;
    Element sub(Element g, Element h) const { return add(g, neg(h)); }

    int component(Element g, std::size_t j) const;
    Element from_components(const std::vector<int>& comps) const;

    // Additive order of g in G.
    int element_order(Element g) const;
    // An element of maximal order (smallest index among those).
    Element max_order_element() const;

    bool is_presented_cyclic() const { return moduli_.size() == 1; }

    // Canonical spec string, e.g. "Z12" or "Z4xZ2".
    std::string spec() const;

    bool operator==(const FiniteAbelianGroup& o) const { return moduli_ == o.moduli_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<int> moduli_;
    std::vector<int> suffix_;  // suffix_[j] = prod_{i>j} d_i
    int order_ = 1;
    // Dense op tables for small groups; keeps the set kernels branch-light.
    std::vector<Element> add_table_;
    std::vector<Element> neg_table_;

    Element add_slow(Element g, Element h) const;
    Element neg_slow(Element g) const;
    void check_index(Element g) const;
};

inline Element FiniteAbelianGroup::add(Element g, Element h) const {
    check_index(g);
    check_index(h);
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(g) * order_ + h];
    return add_slow(g, h);
}

inline Element FiniteAbelianGroup::neg(Element g) const {
    check_index(g);
    if (!neg_table_.empty()) return neg_table_[g];
    return neg_slow(g);
}

}  // namespace popsum
