#include "sset/ordinal.hpp"

#include <algorithm>

namespace sset {

std::vector<int> collapse_to_list(CollapseMask mask) {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if (mask & (CollapseMask{1} << i)) out.push_back(i);
    return out;
}

CollapseMask collapse_from_list(const std::vector<int>& positions, int source_dim) {
    CollapseMask mask = 0;
    int prev = -1;
    for (int p : positions) {
        if (p <= prev)
            throw MalformedError("collapse set must be strictly ascending");
        if (p < 0 || p >= source_dim)
            throw MalformedError("collapse position " + std::to_string(p) +
                                 " out of range for source dimension " + std::to_string(source_dim));
        mask |= CollapseMask{1} << p;
        prev = p;
    }
    return mask;
}

std::vector<CollapseMask> collapse_sets(int slots, int size) {
    std::vector<CollapseMask> out;
    if (size < 0 || size > slots) return out;
    std::vector<int> pick(size);
    // DFS over ascending position vectors yields ascending-vector lex order.
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == size) {
            CollapseMask m = 0;
            for (int p : pick) m |= CollapseMask{1} << p;
            out.push_back(m);
            return;
        }
        for (int p = from; p <= slots - (size - idx); ++p) {
            pick[idx] = p;
            self(self, idx + 1, p + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::string collapse_to_string(CollapseMask mask) {
    std::string s;
    for (int p : collapse_to_list(mask)) {
        if (!s.empty()) s += ",";
        s += std::to_string(p);
    }
    return s;
}

}  // namespace sset
