#include "popsum/group_set.hpp"

#include <stdexcept>

namespace popsum {

void require_same_group(const GroupSet& a, const GroupSet& b) {
    if (a.group() != b.group()) throw std::invalid_argument("sets live in different groups");
}

void GroupSet::check_same_group(const GroupSet& o) const { require_same_group(*this, o); }

GroupSet GroupSet::full(const FiniteAbelianGroup& g) {
    GroupSet s(g);
    for (auto& w : s.words_) w = ~0ull;
    s.mask_tail();
    s.card_ = g.order();
    return s;
}

GroupSet GroupSet::of(const FiniteAbelianGroup& g, std::initializer_list<Element> elems) {
    GroupSet s(g);
    for (Element e : elems) s.add(e);
    return s;
}

GroupSet GroupSet::from_elements(const FiniteAbelianGroup& g, const std::vector<Element>& elems) {
    GroupSet s(g);
    for (Element e : elems) s.add(e);
    return s;
}

GroupSet GroupSet::singleton(const FiniteAbelianGroup& g, Element e) {
    GroupSet s(g);
    s.add(e);
    return s;
}

void GroupSet::add(Element e) {
    if (e < 0 || e >= universe()) throw std::out_of_range("element outside group");
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = 1ull << (e & 63);
    if (!(w & bit)) {
        w |= bit;
        ++card_;
    }
}

void GroupSet::remove(Element e) {
    if (e < 0 || e >= universe()) throw std::out_of_range("element outside group");
    std::uint64_t& w = words_[e >> 6];
    std::uint64_t bit = 1ull << (e & 63);
    if (w & bit) {
        w &= ~bit;
        --card_;
    }
}

bool GroupSet::contains(const GroupSet& sub) const {
    check_same_group(sub);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (sub.words_[w] & ~words_[w]) return false;
    return true;
}

bool GroupSet::intersects(const GroupSet& other) const {
    check_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & other.words_[w]) return true;
    return false;
}

GroupSet GroupSet::operator|(const GroupSet& o) const {
    check_same_group(o);
    GroupSet r(*group_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] | o.words_[w];
    r.recount();
    return r;
}

GroupSet GroupSet::operator&(const GroupSet& o) const {
    check_same_group(o);
    GroupSet r(*group_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
    r.recount();
    return r;
}

GroupSet GroupSet::operator-(const GroupSet& o) const {
    check_same_group(o);
    GroupSet r(*group_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & ~o.words_[w];
    r.recount();
    return r;
}

GroupSet GroupSet::complement() const {
    GroupSet r(*group_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
    r.mask_tail();
    r.recount();
    return r;
}

GroupSet GroupSet::translated(Element g) const {
    const int n = universe();
    if (g < 0 || g >= n) throw std::out_of_range("element outside group");
    if (g == 0) return *this;
    GroupSet r(*group_);
    if (group_->is_presented_cyclic() && n <= 64) {
        // Translation in Z_n is a rotation of the bit vector.
        std::uint64_t w = words_[0];
        std::uint64_t rot = (w << g) | (g == n ? 0 : (w >> (n - g)));
        if (n < 64) rot &= (1ull << n) - 1;
        r.words_[0] = rot;
        r.card_ = card_;
        return r;
    }
    for_each([&](Element e) { r.add(group_->add(g, e)); });
    return r;
}

GroupSet GroupSet::negated() const {
    GroupSet r(*group_);
    for_each([&](Element e) { r.add(group_->neg(e)); });
    return r;
}

Element GroupSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

std::vector<Element> GroupSet::elements() const {
    std::vector<Element> out;
    out.reserve(card_);
    for_each([&](Element e) { out.push_back(e); });
    return out;
}

int GroupSet::compare_bits(const GroupSet& o) const {
    check_same_group(o);
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != o.words_[w]) return words_[w] < o.words_[w] ? -1 : 1;
    }
    return 0;
}

std::uint64_t GroupSet::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

void GroupSet::recount() {
    card_ = 0;
    for (std::uint64_t w : words_) card_ += std::popcount(w);
}

void GroupSet::mask_tail() {
    int tail = universe() & 63;
    if (tail) words_.back() &= (1ull << tail) - 1;
}

}  // namespace popsum
