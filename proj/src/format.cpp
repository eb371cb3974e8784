#include "popsum/format.hpp"

#include <cctype>
#include <stdexcept>

namespace popsum {

namespace {

int parse_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected a number in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

void skip_spaces(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<int> moduli;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        skip_spaces(spec, pos);
        if (pos >= spec.size() || (spec[pos] != 'Z' && spec[pos] != 'z'))
            throw std::invalid_argument("bad group spec '" + spec + "'");
        ++pos;
        moduli.push_back(parse_int(spec, pos));
        skip_spaces(spec, pos);
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X')
                throw std::invalid_argument("bad group spec '" + spec + "'");
            ++pos;
        }
    }
    if (moduli.empty()) throw std::invalid_argument("empty group spec");
    return FiniteAbelianGroup(moduli);
}

std::vector<std::string> expand_group_list(const std::string& arg) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= arg.size()) {
        std::size_t comma = arg.find(',', start);
        std::string item = arg.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        if (!item.empty()) {
            std::size_t dots = item.find("..");
            if (dots != std::string::npos) {
                FiniteAbelianGroup lo = parse_group(item.substr(0, dots));
                FiniteAbelianGroup hi = parse_group(item.substr(dots + 2));
                if (lo.rank() != 1 || hi.rank() != 1)
                    throw std::invalid_argument("group ranges must be cyclic, e.g. Z2..Z10");
                for (int n = lo.order(); n <= hi.order(); ++n)
                    out.push_back("Z" + std::to_string(n));
            } else {
                out.push_back(parse_group(item).spec());
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

GroupSet parse_set(const FiniteAbelianGroup& g, const std::string& literal) {
    GroupSet out(g);
    std::size_t pos = 0;
    skip_spaces(literal, pos);
    if (pos + 1 < literal.size() && literal[pos] == '0' &&
        (literal[pos + 1] == 'x' || literal[pos + 1] == 'X')) {
        pos += 2;
        std::size_t start = pos;
        while (pos < literal.size() && std::isxdigit(static_cast<unsigned char>(literal[pos])))
            ++pos;
        std::size_t end = pos;
        if (end == start) throw std::invalid_argument("empty hex bitmask");
        skip_spaces(literal, pos);
        if (pos != literal.size()) throw std::invalid_argument("trailing junk after bitmask");
        // Hex digits read little-endian in element index: last digit = bits 0-3.
        int bit = 0;
        for (std::size_t i = end; i-- > start;) {
            char c = literal[i];
            int v = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                                                                : std::tolower(c) - 'a' + 10;
            for (int j = 0; j < 4; ++j) {
                if (v >> j & 1) {
                    if (bit + j >= g.order())
                        throw std::invalid_argument("bitmask has bits beyond the group order");
                    out.add(bit + j);
                }
            }
            bit += 4;
        }
        return out;
    }

    if (pos >= literal.size() || literal[pos] != '{')
        throw std::invalid_argument("set literal must be {..} or a 0x bitmask");
    ++pos;
    skip_spaces(literal, pos);
    if (pos < literal.size() && literal[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_spaces(literal, pos);
            if (pos < literal.size() && literal[pos] == '(') {
                ++pos;
                std::vector<int> comps;
                while (true) {
                    skip_spaces(literal, pos);
                    comps.push_back(parse_int(literal, pos));
                    skip_spaces(literal, pos);
                    if (pos < literal.size() && literal[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    break;
                }
                if (pos >= literal.size() || literal[pos] != ')')
                    throw std::invalid_argument("unterminated tuple in set literal");
                ++pos;
                out.add(g.from_components(comps));
            } else {
                int e = parse_int(literal, pos);
                if (e >= g.order()) throw std::invalid_argument("element outside the group");
                out.add(e);
            }
            skip_spaces(literal, pos);
            if (pos < literal.size() && literal[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (pos >= literal.size() || literal[pos] != '}')
            throw std::invalid_argument("unterminated set literal");
        ++pos;
    }
    skip_spaces(literal, pos);
    if (pos != literal.size()) throw std::invalid_argument("trailing junk after set literal");
    return out;
}

std::string format_set(const std::vector<Element>& elems) {
    std::string s = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems[i]);
    }
    s += '}';
    return s;
}

std::vector<std::pair<Element, Element>> parse_tau_pairs(const std::string& literal) {
    std::vector<std::pair<Element, Element>> out;
    std::size_t pos = 0;
    while (pos < literal.size()) {
        skip_spaces(literal, pos);
        int a = parse_int(literal, pos);
        skip_spaces(literal, pos);
        if (pos >= literal.size() || literal[pos] != ':')
            throw std::invalid_argument("tau pairs look like a:b,c:d");
        ++pos;
        skip_spaces(literal, pos);
        int b = parse_int(literal, pos);
        out.emplace_back(a, b);
        skip_spaces(literal, pos);
        if (pos < literal.size()) {
            if (literal[pos] != ',') throw std::invalid_argument("tau pairs look like a:b,c:d");
            ++pos;
        }
    }
    return out;
}

}  // namespace popsum
