#ifndef SSET_ORDINAL_HPP
#define SSET_ORDINAL_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sset/errors.hpp"

namespace sset {

// Ordinals [n] = {0, ..., n} for n up to kMaxDim; collapse sets are stored
// as bitmasks over the gap positions {0, ..., n-1}.
inline constexpr int kMaxDim = 30;

using CollapseMask = std::uint32_t;

inline CollapseMask low_bits(int i) {
    return (i <= 0) ? 0u : (CollapseMask{0xffffffffu} >> (32 - i));
}

// A monotone surjection [n] ->> [m] encoded by its collapse set:
// i is in collapse exactly when the map sends i and i+1 to the same value,
// so m = n - |collapse| and eta(i) = i - |collapse ∩ [0, i)|.
struct OrdinalSurjection {
    int source_dim = 0;
    CollapseMask collapse = 0;

    int target_dim() const { return source_dim - std::popcount(collapse); }
    bool is_identity() const { return collapse == 0; }

    int operator()(int i) const {
        return i - std::popcount(collapse & low_bits(i));
    }

    bool operator==(const OrdinalSurjection&) const = default;
};

// Ascending-vector lexicographic order on collapse sets ({0,2} < {1} because
// [0,2] < [1]); decided at the lowest differing element m, with the proper
// prefix winning ({0} < {0,2}).
inline bool collapse_less(CollapseMask a, CollapseMask b) {
    CollapseMask d = a ^ b;
    if (d == 0) return false;
    CollapseMask lowest = d & (~d + 1u);
    CollapseMask above = ~(lowest | (lowest - 1u));
    if (a & lowest) return (b & above) != 0;  // a owns m: smaller iff b continues past it
    return (a & above) == 0;                  // b owns m: smaller iff a stops before it
}

inline void check_surjection(const OrdinalSurjection& s) {
    if (s.source_dim < 0 || s.source_dim > kMaxDim)
        throw MalformedError("ordinal dimension " + std::to_string(s.source_dim) + " out of range");
    if ((s.collapse & ~low_bits(s.source_dim)) != 0)
        throw MalformedError("collapse set exceeds source dimension " + std::to_string(s.source_dim));
}

// after ∘ before for surjections [n] ->> [m] ->> [r].
inline OrdinalSurjection compose(const OrdinalSurjection& after, const OrdinalSurjection& before) {
    OrdinalSurjection out;
    out.source_dim = before.source_dim;
    int prev = after(before(0));
    for (int i = 1; i <= before.source_dim; ++i) {
        int cur = after(before(i));
        if (cur == prev) out.collapse |= CollapseMask{1} << (i - 1);
        prev = cur;
    }
    return out;
}

// The elementary degeneracy sigma_i : [n+1] ->> [n] precomposed with eta:
// collapse of eta ∘ sigma_i = (collapse below i) | {i} | (collapse >= i shifted up).
inline OrdinalSurjection precompose_degeneracy(const OrdinalSurjection& eta, int i) {
    OrdinalSurjection out;
    out.source_dim = eta.source_dim + 1;
    CollapseMask low = eta.collapse & low_bits(i);
    CollapseMask high = eta.collapse & ~low_bits(i);
    out.collapse = low | (CollapseMask{1} << i) | (high << 1);
    return out;
}

std::vector<int> collapse_to_list(CollapseMask mask);
CollapseMask collapse_from_list(const std::vector<int>& positions, int source_dim);

// All collapse masks over {0..slots-1} with the given popcount, in
// ascending-vector lexicographic order.
std::vector<CollapseMask> collapse_sets(int slots, int size);

std::string collapse_to_string(CollapseMask mask);

}  // namespace sset

#endif
