// GroupSet: a subset of a finite abelian group as a packed bit vector.
//
// Bit g is set iff element g is in the set; cardinality is kept as a running
// counter.  All set arithmetic (union, intersection, translate, negate) is
// word-at-a-time where the group layout allows it.
#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "popsum/group.hpp"

namespace popsum {

class GroupSet {
public:
    GroupSet() = default;
    explicit GroupSet(const FiniteAbelianGroup& g) : group_(&g) {
        words_.assign((universe() + 63) / 64, 0);
    }
    static GroupSet full(const FiniteAbelianGroup& g);
    static GroupSet of(const FiniteAbelianGroup& g, std::initializer_list<Element> elems);
    static GroupSet from_elements(const FiniteAbelianGroup& g, const std::vector<Element>& elems);
    static GroupSet singleton(const FiniteAbelianGroup& g, Element e);

    const FiniteAbelianGroup& group() const { return *group_; }
    int universe() const { return group_->order(); }
    int size() const { return card_; }
    bool empty() const { return card_ == 0; }

    bool test(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void add(Element e);
    void remove(Element e);

    bool contains(const GroupSet& sub) const;  // superset test
    bool intersects(const GroupSet& other) const;

    GroupSet operator|(const GroupSet& o) const;
    GroupSet operator&(const GroupSet& o) const;
    GroupSet operator-(const GroupSet& o) const;
    GroupSet complement() const;

    bool operator==(const GroupSet& o) const { return words_ == o.words_; }
    bool operator!=(const GroupSet& o) const { return words_ != o.words_; }

    // {g + x : x in set}.  Single-word cyclic groups use a bit rotation.
    GroupSet translated(Element g) const;
    // {-x : x in set}.
    GroupSet negated() const;

    // Smallest element, or -1 if empty.
    Element first() const;
    std::vector<Element> elements() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                int b = std::countr_zero(bits);
                f(static_cast<Element>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    // |this & other| without materializing the intersection.
    int intersection_size(const GroupSet& other) const {
        int c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += std::popcount(words_[w] & other.words_[w]);
        return c;
    }

    // Three-way comparison of the raw bit vectors as unsigned integers;
    // the canonical tie-break order used throughout.
    int compare_bits(const GroupSet& o) const;
    bool bits_less(const GroupSet& o) const { return compare_bits(o) < 0; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::uint64_t hash() const;

private:
    const FiniteAbelianGroup* group_ = nullptr;
    std::vector<std::uint64_t> words_;
    int card_ = 0;

    void recount();
    void mask_tail();
    void check_same_group(const GroupSet& o) const;
};

// Throws std::invalid_argument unless both sets live in the same group.
void require_same_group(const GroupSet& a, const GroupSet& b);

}  // namespace popsum
