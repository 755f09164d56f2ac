#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace chordalkit {

struct CoverResult {
    int size = 0;
    std::vector<int> chosen;  // indices into the family list / universe
};

/// Exact minimum set cover over a universe of at most 30 elements, top-down
/// DP over uncovered-element masks. Returns nullopt if some element is in no
/// family. Throws on universes above the limit.
inline std::optional<CoverResult> set_cover_exact(int universe_size,
                                                  const std::vector<uint32_t>& families) {
    if (universe_size < 0 || universe_size > 30)
        throw std::invalid_argument("set_cover_exact: universe size must be in [0,30]");
    uint32_t full = universe_size == 0 ? 0u : ((universe_size == 30 ? (1u << 30) : (1u << universe_size)) - 0u);
    full = universe_size == 0 ? 0u : ((uint32_t(1) << universe_size) - 1u);
    uint32_t coverable = 0;
    for (uint32_t f : families) coverable |= f;
    if ((coverable & full) != full) return std::nullopt;

    constexpr int kInf = 1 << 29;
    std::unordered_map<uint32_t, int> memo;
    // best(mask) = min number of families covering every element in mask
    auto best = [&](auto&& self, uint32_t mask) -> int {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        // branch on the lowest uncovered element
        uint32_t bit = mask & (~mask + 1);
        int res = kInf;
        for (uint32_t f : families)
            if (f & bit) res = std::min(res, 1 + self(self, mask & ~f));
        memo[mask] = res;
        return res;
    };
    CoverResult out;
    out.size = best(best, full);
    uint32_t mask = full;
    while (mask != 0) {
        uint32_t bit = mask & (~mask + 1);
        for (size_t i = 0; i < families.size(); ++i) {
            if (!(families[i] & bit)) continue;
            if (1 + best(best, mask & ~families[i]) == best(best, mask)) {
                out.chosen.push_back(static_cast<int>(i));
                mask &= ~families[i];
                break;
            }
        }
    }
    return out;
}

/// Exact minimum hitting set: choose elements of the universe so that every
/// listed set is hit, brute force over subsets by increasing size (the
/// universe is the parameter). Returns nullopt if some listed set is empty.
inline std::optional<CoverResult> hitting_set_exact(int universe_size,
                                                    const std::vector<uint32_t>& sets) {
    if (universe_size < 0 || universe_size > 30)
        throw std::invalid_argument("hitting_set_exact: universe size must be in [0,30]");
    for (uint32_t s : sets)
        if (s == 0) return std::nullopt;
    if (sets.empty()) return CoverResult{0, {}};

    std::vector<int> comb;
    // enumerate size-s subsets of [universe_size] in lexicographic order
    auto try_size = [&](int s, auto&& self, uint32_t chosen, int start, int left) -> bool {
        if (left == 0) {
            for (uint32_t set : sets)
                if (!(set & chosen)) return false;
            return true;
        }
        for (int e = start; e <= universe_size - left; ++e) {
            comb.push_back(e);
            if (self(s, self, chosen | (uint32_t(1) << e), e + 1, left - 1)) return true;
            comb.pop_back();
        }
        return false;
    };
    for (int s = 0; s <= universe_size; ++s) {
        comb.clear();
        if (try_size(s, try_size, 0, 0, s)) return CoverResult{s, comb};
    }
    return std::nullopt;  // unreachable: nonempty sets are hit by the full universe
}

}  // namespace chordalkit
