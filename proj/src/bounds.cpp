#include "reconf/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace reconf::bounds {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t sum = a + b;
    return sum < a ? std::numeric_limits<std::uint64_t>::max() : sum;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t out = 1;
    while (exp-- > 0) out = saturating_mul(out, base);
    return out;
}

std::uint64_t saturating_factorial(unsigned n) {
    std::uint64_t out = 1;
    for (unsigned i = 2; i <= n; ++i) out = saturating_mul(out, i);
    return out;
}

std::uint64_t low_degree_threshold(int d, int k) {
    const auto width = static_cast<unsigned>(2 * d + 1);
    return saturating_mul(saturating_factorial(width), saturating_pow(static_cast<std::uint64_t>(2 * k - 1), width));
}

std::uint64_t degenerate_kernel_outside(int d, int k) {
    return saturating_mul(static_cast<std::uint64_t>(2 * d + 1), low_degree_threshold(d, k));
}

std::uint64_t degenerate_kernel_total(int d, int k) {
    return saturating_add(degenerate_kernel_outside(d, k), static_cast<std::uint64_t>(2 * k));
}

std::uint64_t dsr_kernel_bound(int d, int k) {
    const auto ud = static_cast<std::uint64_t>(d);
    const std::uint64_t core = saturating_mul(ud, saturating_pow(static_cast<std::uint64_t>(k), static_cast<unsigned>(d)));
    const std::uint64_t outside =
        saturating_mul(2 * ud, saturating_pow(saturating_mul(3, core), static_cast<unsigned>(2 * d)));
    return saturating_add(saturating_add(core, static_cast<std::uint64_t>(2 * k)), outside);
}

long double twinless_bound(std::uint64_t a, int d) {
    const long double ratio = static_cast<long double>(a) * std::numbers::e_v<long double> / d;
    return 2.0L * (d - 1) * std::pow(ratio, 2 * d);
}

}  // namespace reconf::bounds
