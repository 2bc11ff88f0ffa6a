#ifndef PEBBLE_FORMULAS_HPP
#define PEBBLE_FORMULAS_HPP

#include <cstdint>

#include "errors.hpp"

namespace pebble {

// pi*_t(K_n): with t = (n+1)q + r, the value is 2nq + 2r, except 2nq + 2n - 1
// when r = n.
inline std::int64_t pi_t_star_complete_formula(std::int64_t n, std::int64_t t) {
    if (n < 1 || t < 1) throw invalid_parameter("pi_t_star_complete_formula requires n, t >= 1");
    std::int64_t q = t / (n + 1);
    std::int64_t r = t % (n + 1);
    if (r < n) return 2 * n * q + 2 * r;
    return 2 * n * q + 2 * n - 1;
}

// pi*_t(K_2 x K_2): 3 at t = 1, then 16q + 2r with a -1 correction for
// r in {6,7,8}, where t = 9q + r.
inline std::int64_t k2k2_formula(std::int64_t t) {
    if (t < 1) throw invalid_parameter("k2k2_formula requires t >= 1");
    if (t == 1) return 3;
    std::int64_t q = t / 9;
    std::int64_t r = t % 9;
    if (r >= 6) return 16 * q + 2 * r - 1;
    return 16 * q + 2 * r;
}

// pi*_t(K_2 x K_3): 12q when r = 0, else 12q + 2r + 1, where t = 6q + r.
inline std::int64_t k2k3_formula(std::int64_t t) {
    if (t < 1) throw invalid_parameter("k2k3_formula requires t >= 1");
    std::int64_t q = t / 6;
    std::int64_t r = t % 6;
    if (r == 0) return 12 * q;
    return 12 * q + 2 * r + 1;
}

} // namespace pebble

#endif
