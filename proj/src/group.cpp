#include "popsum/group.hpp"

#include <stdexcept>

namespace popsum {

namespace {
constexpr int kOpTableMaxOrder = 256;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    long long order = 1;
    for (int d : moduli_) {
        if (d < 1) throw std::invalid_argument("cyclic factor must be >= 1");
        order *= d;
        if (order > (1 << 20)) throw std::invalid_argument("group order too large");
    }
    order_ = static_cast<int>(order);
    suffix_.assign(moduli_.size(), 1);
    for (std::size_t j = moduli_.size(); j-- > 1;) suffix_[j - 1] = suffix_[j] * moduli_[j];

    if (order_ <= kOpTableMaxOrder) {
        neg_table_.resize(order_);
        for (Element g = 0; g < order_; ++g) neg_table_[g] = neg_slow(g);
        add_table_.resize(static_cast<std::size_t>(order_) * order_);
        for (Element g = 0; g < order_; ++g)
            for (Element h = 0; h < order_; ++h)
                add_table_[static_cast<std::size_t>(g) * order_ + h] = add_slow(g, h);
    }
}

void FiniteAbelianGroup::check_index(Element g) const {
    if (g < 0 || g >= order_) throw std::out_of_range("element index out of range");
}

Element FiniteAbelianGroup::add_slow(Element g, Element h) const {
    Element out = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        int cg = (g / suffix_[j]) % moduli_[j];
        int ch = (h / suffix_[j]) % moduli_[j];
        int c = cg + ch;
        if (c >= moduli_[j]) c -= moduli_[j];
        out += c * suffix_[j];
    }
    return out;
}

Element FiniteAbelianGroup::neg_slow(Element g) const {
    Element out = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        int c = (g / suffix_[j]) % moduli_[j];
        if (c != 0) c = moduli_[j] - c;
        out += c * suffix_[j];
    }
    return out;
}

int FiniteAbelianGroup::component(Element g, std::size_t j) const {
    check_index(g);
    if (j >= moduli_.size()) throw std::out_of_range("component index out of range");
    return (g / suffix_[j]) % moduli_[j];
}

Element FiniteAbelianGroup::from_components(const std::vector<int>& comps) const {
    if (comps.size() != moduli_.size())
        throw std::invalid_argument("component count does not match group rank");
    Element out = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        int c = comps[j] % moduli_[j];
        if (c < 0) c += moduli_[j];
        out += c * suffix_[j];
    }
    return out;
}

int FiniteAbelianGroup::element_order(Element g) const {
    check_index(g);
    int n = 1;
    Element x = g;
    while (x != 0) {
        x = add(x, g);
        ++n;
    }
    return n;
}

Element FiniteAbelianGroup::max_order_element() const {
    Element best = 0;
    int best_order = 1;
    for (Element g = 0; g < order_; ++g) {
        int og = element_order(g);
        if (og > best_order) {
            best_order = og;
            best = g;
        }
    }
    return best;
}

std::string FiniteAbelianGroup::spec() const {
    std::string s;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
        if (j) s += 'x';
        s += 'Z';
        s += std::to_string(moduli_[j]);
    }
    return s;
}

}  // namespace popsum
