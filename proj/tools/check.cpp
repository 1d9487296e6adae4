#include "check.hpp"

#include <euclid/oracles.hpp>

#include <exception>
#include <stdexcept>
#include <string>

namespace euclid::check {

namespace {

class PairChecker
{
public:
    PairChecker(Integer k, Integer n) : k_(k), n_(n) {}

    void expect(bool ok, const char* invariant, const std::string& detail = {})
    {
        if (!ok && !failure_)
        {
            failure_ = Failure{k_, n_, invariant, detail};
        }
    }

    bool failed() const noexcept { return failure_.has_value(); }
    std::optional<Failure> result() && { return std::move(failure_); }

private:
    Integer k_;
    Integer n_;
    std::optional<Failure> failure_;
};

std::string got_expected(auto got, auto expected)
{
    return "got " + std::to_string(got) + ", expected " + std::to_string(expected);
}

bool structure_holds(const EuclideanArray& array, std::size_t expected_width)
{
    if (array.index_row().size() != expected_width || array.integer_row().size() != expected_width ||
        array.residue_row().size() != expected_width)
    {
        return false;
    }
    for (std::size_t j = 0; j < expected_width; ++j)
    {
        const Column c = array.column(j);
        if (c.index != static_cast<Integer>(j) - 1 || c.integer != array.k() * c.index || c.residue < 0 ||
            c.residue >= array.n() || (c.integer - c.residue) % array.n() != 0)
        {
            return false;
        }
    }
    return true;
}

void check_pair_into(PairChecker& check, Integer k, Integer n, const Subject& subject)
{
    const Integer g = oracles::classic_gcd(k, n);

    const EuclideanArray full = subject.build(k, n);
    check.expect(!full.reduced() && structure_holds(full, static_cast<std::size_t>(n) + 1), "array-structure");
    const Integer array_gcd = subject.gcd(full);
    check.expect(array_gcd == g, "gcd-oracle", got_expected(array_gcd, g));

    const EuclideanArray reduced = subject.build_reduced(k, n);
    const std::size_t reduced_width = static_cast<std::size_t>(n / g) + 1;
    check.expect(reduced.reduced() && structure_holds(reduced, reduced_width), "reduced-width",
                 got_expected(reduced.width(), reduced_width));
    check.expect(subject.gcd(reduced) == g, "reduced-gcd");
    if (check.failed())
    {
        return;
    }

    if (0 < k && k < n)
    {
        const Integer greatest = max_positive_residue(full);
        check.expect(greatest == n - g, "max-positive-residue", got_expected(greatest, n - g));
    }

    const Rhythm rhythm = subject.rhythm(full);
    check.expect(rhythm.length() == static_cast<std::size_t>(n), "rhythm-length");
    if (check.failed())
    {
        return;
    }
    check.expect(note_count(rhythm) == static_cast<std::size_t>(k), "note-count",
                 got_expected(note_count(rhythm), k));
    if (k >= 1)
    {
        check.expect(minimal_period(rhythm) == static_cast<std::size_t>(n / g), "minimal-period",
                     got_expected(minimal_period(rhythm), n / g));
        check.expect(gcd_from_rhythm(rhythm) == static_cast<std::size_t>(g), "gcd-from-rhythm");
    }
    check.expect(rhythm == oracles::bresenham_rhythm(k, n), "bresenham-rhythm",
                 rhythm.str() + " vs " + oracles::bresenham_rhythm(k, n).str());
    check.expect(rhythm == rhythm_from_reduced(reduced), "reduced-rhythm");
    const Rhythm bjorklund = oracles::bjorklund(k, n);
    check.expect(cyclically_equal(rhythm, bjorklund), "bjorklund-cyclic", rhythm.str() + " vs " + bjorklund.str());

    if (0 < k && k < n)
    {
        const Rhythm ascents = ascent_rhythm(full);
        check.expect(ascents == complement(rhythm), "ascent-complement");
        check.expect(cyclically_equal(ascents, subject.rhythm(subject.build(n - k, n))), "complement-lemma");
    }

    if (k > 0)
    {
        const BezoutSolution primary = bezout_primary(full);
        check.expect(primary.g == g && primary.certifies(k, n), "bezout-primary");
        const auto extended = oracles::classic_extended(k, n);
        check.expect(extended.g == primary.g, "classic-extended");
        for (std::size_t j = 0; j < full.width(); ++j)
        {
            if (full.residue_row()[j] == g)
            {
                check.expect(bezout_from_column(full, j).certifies(k, n), "bezout-any-column");
            }
        }
    }
    if (0 < k && k < n)
    {
        check.expect(bezout_complement(full).certifies(k, n), "bezout-complement");
        for (std::size_t j = 0; j < full.width(); ++j)
        {
            if (full.residue_row()[j] == n - g)
            {
                check.expect(bezout_complement_from_column(full, j).certifies(k, n), "bezout-complement-any-column");
            }
        }
    }

    const GcdReport streamed = subject.streaming(k, n);
    check.expect(streamed.g == g, "streaming-gcd", got_expected(streamed.g, g));
    check.expect(streamed.columns_computed <= static_cast<std::size_t>(n) + 1, "streaming-columns");
}

} // namespace

std::optional<Failure> check_pair(Integer k, Integer n, const Subject& subject)
{
    PairChecker check(k, n);
    try
    {
        check_pair_into(check, k, n, subject);
    }
    catch (const std::exception& e)
    {
        check.expect(false, "no-exception", e.what());
    }
    return std::move(check).result();
}

Report run(Integer max, const Subject& subject)
{
    if (max < 1)
    {
        throw std::domain_error("check range needs max >= 1");
    }
    Report report;
    for (Integer n = 1; n <= max; ++n)
    {
        for (Integer k = 0; k <= n; ++k)
        {
            ++report.pairs;
            if (auto failure = check_pair(k, n, subject))
            {
                report.failure = std::move(failure);
                return report;
            }
        }
    }
    return report;
}

} // namespace euclid::check
