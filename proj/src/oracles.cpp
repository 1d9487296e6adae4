#include <euclid/oracles.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace euclid::oracles {

namespace {

void require_gcd_arguments(Integer k, Integer n)
{
    if (k < 0 || n < 0)
    {
        throw std::domain_error("gcd arguments must be non-negative");
    }
    if (k == 0 && n == 0)
    {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
}

// Rounds toward negative infinity; k * (i - 1) is negative at i = 0.
Integer floored_quotient(Integer value, Integer divisor)
{
    Integer q = value / divisor;
    if (value % divisor != 0 && value < 0)
    {
        --q;
    }
    return q;
}

} // namespace

Integer classic_gcd(Integer k, Integer n)
{
    require_gcd_arguments(k, n);
    while (n != 0)
    {
        k = std::exchange(n, k % n);
    }
    return k;
}

ExtendedGcdResult classic_extended(Integer k, Integer n)
{
    require_gcd_arguments(k, n);
    // invariant: old_r = old_a*k + old_b*n and r = a*k + b*n
    Integer old_r = k, r = n;
    Integer old_a = 1, a = 0;
    Integer old_b = 0, b = 1;
    while (r != 0)
    {
        const Integer q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_a = std::exchange(a, old_a - q * a);
        old_b = std::exchange(b, old_b - q * b);
    }
    const ExtendedGcdResult result{old_r, old_a, old_b};
    if (result.a * k + result.b * n != result.g)
    {
        throw std::logic_error("extended gcd identity failed");
    }
    return result;
}

Rhythm bjorklund(Integer k, Integer n)
{
    require_valid_pair(k, n);
    const auto notes = static_cast<std::size_t>(k);
    const auto total = static_cast<std::size_t>(n);
    if (notes == 0 || notes == total)
    {
        return Rhythm(std::vector<Beat>(total, notes == 0 ? Beat::rest : Beat::note));
    }

    using Group = std::vector<Beat>;
    std::vector<Group> heads(notes, Group{Beat::note});
    std::vector<Group> remainders(total - notes, Group{Beat::rest});
    while (remainders.size() > 1)
    {
        const std::size_t paired = std::min(heads.size(), remainders.size());
        std::vector<Group> leftover;
        if (heads.size() > paired)
        {
            leftover.assign(heads.begin() + static_cast<std::ptrdiff_t>(paired), heads.end());
        }
        else
        {
            leftover.assign(remainders.begin() + static_cast<std::ptrdiff_t>(paired), remainders.end());
        }
        heads.resize(paired);
        for (std::size_t i = 0; i < paired; ++i)
        {
            heads[i].insert(heads[i].end(), remainders[i].begin(), remainders[i].end());
        }
        remainders = std::move(leftover);
    }

    std::vector<Beat> beats;
    beats.reserve(total);
    for (const auto* groups : {&heads, &remainders})
    {
        for (const Group& g : *groups)
        {
            beats.insert(beats.end(), g.begin(), g.end());
        }
    }
    return Rhythm(std::move(beats));
}

Rhythm bresenham_rhythm(Integer k, Integer n)
{
    require_valid_pair(k, n);
    std::vector<Beat> beats(static_cast<std::size_t>(n), Beat::rest);
    for (Integer i = 0; i < n; ++i)
    {
        if (floored_quotient(k * i, n) - floored_quotient(k * (i - 1), n) == 1)
        {
            beats[static_cast<std::size_t>(i)] = Beat::note;
        }
    }
    return Rhythm(std::move(beats));
}

} // namespace euclid::oracles
