#pragma once

#include <euclid/array.hpp>
#include <euclid/rhythm.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace euclid::check {

/// The array-method functions under test. Replacing one lets a test inject a
/// fault and watch the suite catch it.
struct Subject
{
    std::function<EuclideanArray(Integer, Integer)> build = build_array;
    std::function<EuclideanArray(Integer, Integer)> build_reduced = build_reduced_array;
    std::function<Integer(const EuclideanArray&)> gcd = gcd_of;
    std::function<Rhythm(const EuclideanArray&)> rhythm = rhythm_of;
    std::function<GcdReport(Integer, Integer)> streaming = gcd_streaming;
};

struct Failure
{
    Integer k;
    Integer n;
    std::string invariant;
    std::string detail;
};

struct Report
{
    std::size_t pairs = 0;
    std::optional<Failure> failure;

    bool passed() const noexcept { return !failure.has_value(); }
};

/// Every invariant for one pair; empty when all hold.
std::optional<Failure> check_pair(Integer k, Integer n, const Subject& subject = {});

/// Runs check_pair over 0 <= k <= n <= max, n >= 1, stopping at the first
/// failure.
Report run(Integer max, const Subject& subject = {});

} // namespace euclid::check
