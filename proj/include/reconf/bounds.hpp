#pragma once

#include <cstdint>

// Closed-form size bounds used by the reducers. Integer bounds saturate at
// UINT64_MAX instead of overflowing.

namespace reconf::bounds {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);
std::uint64_t saturating_factorial(unsigned n);

/// (2d+1)! * (2k-1)^(2d+1): more low-degree vertices than this force a
/// sunflower with 2k petals among their closed neighborhoods.
std::uint64_t low_degree_threshold(int d, int k);

/// (2d+1) * low_degree_threshold(d, k): vertices outside the endpoints in a
/// fully reduced d-degenerate instance.
std::uint64_t degenerate_kernel_outside(int d, int k);

/// degenerate_kernel_outside(d, k) + 2k.
std::uint64_t degenerate_kernel_total(int d, int k);

/// d*k^d + 2k + 2d*(3*d*k^d)^(2d): vertices left after core-twin removal on
/// a K_{d,d}-free graph.
std::uint64_t dsr_kernel_bound(int d, int k);

/// 2(d-1) * (a*e/d)^(2d): largest twinless side of a K_{d,d}-free bipartite
/// graph whose other side has `a` vertices.
long double twinless_bound(std::uint64_t a, int d);

}  // namespace reconf::bounds
