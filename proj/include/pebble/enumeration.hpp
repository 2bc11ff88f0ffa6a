#ifndef PEBBLE_ENUMERATION_HPP
#define PEBBLE_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "perm.hpp"

namespace pebble {

// Enumerate weak compositions of `total` into `parts` nonnegative summands,
// in lexicographically ascending order.  The visitor returns false to stop.
inline bool weak_compositions(std::int64_t total, int parts,
                              const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    std::vector<std::int64_t> cur(parts, 0);
    std::function<bool(int, std::int64_t)> rec = [&](int i, std::int64_t rest) -> bool {
        if (i == parts - 1) {
            cur[i] = rest;
            return visit(cur);
        }
        for (std::int64_t c = 0; c <= rest; ++c) {
            cur[i] = c;
            if (!rec(i + 1, rest - c)) return false;
        }
        return true;
    };
    if (parts == 0) return total == 0 ? visit(cur) : true;
    return rec(0, total);
}

// A count vector is canonical iff it is lexicographically minimal within its
// orbit under the (fully enumerated) group.  Enumerating only canonical
// vectors keeps one representative per orbit of distributions.
inline bool is_canonical_under(const std::vector<std::int64_t>& counts,
                               const std::vector<Permutation>& group) {
    std::vector<std::int64_t> image(counts.size());
    for (const auto& p : group) {
        for (std::size_t v = 0; v < counts.size(); ++v) image[p[v]] = counts[v];
        if (image < counts) return false;
    }
    return true;
}

} // namespace pebble

#endif
