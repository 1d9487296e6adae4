#pragma once

#include <euclid/array.hpp>
#include <euclid/rhythm.hpp>

// Reference implementations that share no code path with the array method.
// They exist to cross-validate it.

namespace euclid::oracles {

/// Divide-with-remainder gcd of non-negative integers, not both zero.
Integer classic_gcd(Integer k, Integer n);

struct ExtendedGcdResult
{
    Integer g;
    Integer a;
    Integer b;
};

/// Extended Euclid by back-substitution; the result satisfies a*k + b*n = g.
ExtendedGcdResult classic_extended(Integer k, Integer n);

/// Bjorklund's pairing-of-remainders construction of k notes spread over
/// n beats.
Rhythm bjorklund(Integer k, Integer n);

/// Beat i is a note iff floor(k*i/n) - floor(k*(i-1)/n) = 1, i.e. the line
/// from (-1, -k) with slope k crosses a multiple of n on (i-1, i].
Rhythm bresenham_rhythm(Integer k, Integer n);

} // namespace euclid::oracles
