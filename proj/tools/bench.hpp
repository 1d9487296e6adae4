#pragma once

#include <euclid/array.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace euclid::bench {

struct Options
{
    Integer max = 100000;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
};

struct Report
{
    Options options;
    std::size_t coprime_pairs = 0;
    std::size_t composite_pairs = 0;
    double streaming_ns = 0.0; ///< mean per call
    double classic_ns = 0.0;   ///< mean per call
    bool results_agree = true;

    double ratio() const noexcept { return classic_ns > 0.0 ? streaming_ns / classic_ns : 0.0; }
};

/// Alternates coprime pairs with pairs sharing a factor; every pair has
/// 2 <= n <= max and 0 < k <= n.
std::vector<std::pair<Integer, Integer>> sample_pairs(const Options& options);

/// Times gcd_streaming against classic divide-with-remainder on the same
/// pairs. Throws std::domain_error for max < 2 or zero samples.
Report run(const Options& options);

void print(std::ostream& out, const Report& report);

} // namespace euclid::bench
