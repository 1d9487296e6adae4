#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <euclid/array.hpp>

#include <set>
#include <stdexcept>
#include <vector>

using namespace euclid;

namespace {

using Row = std::vector<Integer>;

Row to_row(std::span<const Integer> s)
{
    return {s.begin(), s.end()};
}

// Largest d dividing both, by trial. Independent of any Euclid-style routine.
Integer brute_gcd(Integer k, Integer n)
{
    for (Integer d = std::max(k, n); d > 1; --d)
    {
        if (k % d == 0 && n % d == 0)
        {
            return d;
        }
    }
    return 1;
}

// Residues of k*i mod n for i = -1 .. n-1 by direct multiplication.
Row brute_residues(Integer k, Integer n)
{
    Row row;
    for (Integer i = -1; i < n; ++i)
    {
        row.push_back(((k * i) % n + n) % n);
    }
    return row;
}

constexpr Integer property_limit = 256;

} // namespace

TEST_SUITE("build_array")
{
    TEST_CASE("E(3,7) matches the worked three-seven array")
    {
        const auto a = build_array(3, 7);
        CHECK_FALSE(a.reduced());
        CHECK(to_row(a.index_row()) == Row{-1, 0, 1, 2, 3, 4, 5, 6});
        CHECK(to_row(a.integer_row()) == Row{-3, 0, 3, 6, 9, 12, 15, 18});
        CHECK(to_row(a.residue_row()) == Row{4, 0, 3, 6, 2, 5, 1, 4});
    }

    TEST_CASE("E(2,4) matches the marked two-four array")
    {
        const auto a = build_array(2, 4);
        CHECK(to_row(a.index_row()) == Row{-1, 0, 1, 2, 3});
        CHECK(to_row(a.integer_row()) == Row{-2, 0, 2, 4, 6});
        CHECK(to_row(a.residue_row()) == Row{2, 0, 2, 0, 2});
    }

    TEST_CASE("zero multiplier gives zero rows")
    {
        const auto a = build_array(0, 3);
        CHECK(to_row(a.index_row()) == Row{-1, 0, 1, 2});
        CHECK(to_row(a.integer_row()) == Row{0, 0, 0, 0});
        CHECK(to_row(a.residue_row()) == Row{0, 0, 0, 0});
    }

    TEST_CASE("domain violations are rejected")
    {
        CHECK_THROWS_AS(build_array(5, 4), std::domain_error);
        CHECK_THROWS_AS(build_array(0, 0), std::domain_error);
        CHECK_THROWS_AS(build_array(-1, 4), std::domain_error);
        CHECK_THROWS_AS(build_array(1, max_modulus + 1), std::domain_error);
        CHECK_THROWS_AS(build_reduced_array(5, 4), std::domain_error);
        CHECK_THROWS_AS(gcd_streaming(5, 4), std::domain_error);
    }

    TEST_CASE("column access")
    {
        const auto a = build_array(3, 7);
        CHECK(a.column(6) == Column{5, 15, 1});
        CHECK_THROWS_AS(a.column(8), std::out_of_range);
    }

    TEST_CASE("structure holds for every pair up to 256")
    {
        for (Integer n = 1; n <= property_limit; ++n)
        {
            for (Integer k = 0; k <= n; ++k)
            {
                const auto a = build_array(k, n);
                REQUIRE(a.width() == static_cast<std::size_t>(n + 1));
                REQUIRE(a.index_row().size() == a.width());
                REQUIRE(a.integer_row().size() == a.width());
                for (std::size_t j = 0; j < a.width(); ++j)
                {
                    REQUIRE(a.index_row()[j] == static_cast<Integer>(j) - 1);
                    REQUIRE(a.integer_row()[j] == k * a.index_row()[j]);
                }
                REQUIRE(to_row(a.residue_row()) == brute_residues(k, n));
            }
        }
    }
}

TEST_SUITE("build_reduced_array")
{
    TEST_CASE("reduced E(4,6) stops after the first repeat")
    {
        const auto a = build_reduced_array(4, 6);
        CHECK(a.reduced());
        CHECK(to_row(a.index_row()) == Row{-1, 0, 1, 2});
        CHECK(to_row(a.integer_row()) == Row{-4, 0, 4, 8});
        CHECK(to_row(a.residue_row()) == Row{2, 0, 4, 2});
    }

    TEST_CASE("reduced E(3,7) is the whole array")
    {
        // 3*i mod 7 takes seven distinct values over i = -1..5.
        const Row residues = brute_residues(3, 7);
        CHECK(std::set<Integer>(residues.begin(), residues.end() - 1).size() == 7);

        const auto reduced = build_reduced_array(3, 7);
        const auto full = build_array(3, 7);
        CHECK(to_row(reduced.index_row()) == to_row(full.index_row()));
        CHECK(to_row(reduced.integer_row()) == to_row(full.integer_row()));
        CHECK(to_row(reduced.residue_row()) == to_row(full.residue_row()));
    }

    TEST_CASE("k = n repeats at the second column")
    {
        const auto a = build_reduced_array(6, 6);
        CHECK(to_row(a.index_row()) == Row{-1, 0});
        CHECK(to_row(a.integer_row()) == Row{-6, 0});
        CHECK(to_row(a.residue_row()) == Row{0, 0});
    }

    TEST_CASE("width is n/gcd + 1 and only the last residue repeats")
    {
        for (Integer n = 1; n <= property_limit; ++n)
        {
            for (Integer k = 0; k <= n; ++k)
            {
                const auto a = build_reduced_array(k, n);
                const auto g = brute_gcd(k, n);
                REQUIRE(a.width() == static_cast<std::size_t>(n / g + 1));
                const auto row = a.residue_row();
                const std::set<Integer> earlier(row.begin(), row.end() - 1);
                REQUIRE(earlier.size() == a.width() - 1);
                REQUIRE(earlier.contains(row.back()));
                const Row prefix = brute_residues(k, n);
                REQUIRE(to_row(row) == Row(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(a.width())));
                REQUIRE(gcd_of(a) == gcd_of(build_array(k, n)));
            }
        }
    }
}

TEST_SUITE("gcd_of")
{
    TEST_CASE("worked examples")
    {
        CHECK(gcd_of(build_array(3, 7)) == 1);
        CHECK(gcd_of(build_reduced_array(4, 6)) == 2);
        CHECK(gcd_of(build_array(0, 5)) == 5);
        CHECK(gcd_of(build_array(5, 5)) == 5);
    }

    TEST_CASE("agrees with trial division for every pair up to 256")
    {
        for (Integer n = 1; n <= property_limit; ++n)
        {
            for (Integer k = 0; k <= n; ++k)
            {
                REQUIRE(gcd_of(build_array(k, n)) == brute_gcd(k, n));
            }
        }
    }
}

TEST_SUITE("max_positive_residue")
{
    TEST_CASE("worked examples")
    {
        CHECK(max_positive_residue(build_array(3, 7)) == 6);
        CHECK(max_positive_residue(build_array(2, 4)) == 2);

        Integer greatest = 0;
        for (const Integer r : brute_residues(5, 10))
        {
            greatest = std::max(greatest, r);
        }
        REQUIRE(greatest == 5);
        CHECK(max_positive_residue(build_array(5, 10)) == greatest);
    }

    TEST_CASE("no positive residue at the edges")
    {
        CHECK_THROWS_AS(max_positive_residue(build_array(0, 4)), std::domain_error);
        CHECK_THROWS_AS(max_positive_residue(build_array(4, 4)), std::domain_error);
    }

    TEST_CASE("equals n - gcd for interior k")
    {
        for (Integer n = 2; n <= property_limit; ++n)
        {
            for (Integer k = 1; k < n; ++k)
            {
                REQUIRE(max_positive_residue(build_array(k, n)) == n - brute_gcd(k, n));
            }
        }
    }
}

TEST_SUITE("bezout")
{
    TEST_CASE("primary solution from the leftmost gcd column")
    {
        CHECK(bezout_primary(build_array(3, 7)) == BezoutSolution{5, -2, 1});
        // leftmost residue 2 in E(2,4) is the column (-1, -2, 2)
        CHECK(bezout_primary(build_array(2, 4)) == BezoutSolution{-1, 1, 2});
        CHECK(bezout_primary(build_array(1, 1)) == BezoutSolution{0, 1, 1});
        CHECK(bezout_primary(build_array(4, 4)) == BezoutSolution{0, 1, 4});
        CHECK_THROWS_AS(bezout_primary(build_array(0, 4)), std::domain_error);
    }

    TEST_CASE("complement solution from the leftmost n - gcd column")
    {
        // 1*7 - 2*3 = 1 from column (2, 6, 6)
        CHECK(bezout_complement(build_array(3, 7)) == BezoutSolution{-2, 1, 1});
        // E(2,4): residue 2 = n - gcd first appears at column (-1, -2, 2),
        // giving 1*2 + 0*4 = 2; the later column (1, 2, 2) gives 1*4 - 1*2 = 2.
        CHECK(bezout_complement(build_array(2, 4)) == BezoutSolution{1, 0, 2});
        CHECK(bezout_complement_from_column(build_array(2, 4), 2) == BezoutSolution{-1, 1, 2});
        // column (1, 4, 4): 6 - 4 = 2
        CHECK(bezout_complement(build_reduced_array(4, 6)) == BezoutSolution{-1, 1, 2});
        CHECK_THROWS_AS(bezout_complement(build_array(0, 4)), std::domain_error);
        CHECK_THROWS_AS(bezout_complement(build_array(4, 4)), std::domain_error);
    }

    TEST_CASE("complement column whose integer exceeds its residue")
    {
        // E(5,7): residue 6 first appears at column (4, 20, 6), so the n
        // coefficient is 1 + (20 - 6) / 7 = 3 and -4*5 + 3*7 = 1.
        const auto a = build_array(5, 7);
        CHECK(a.column(5) == Column{4, 20, 6});
        const auto s = bezout_complement(a);
        CHECK(s == BezoutSolution{-4, 3, 1});
        CHECK(-4 * 5 + 3 * 7 == 1);
    }

    TEST_CASE("columns with the wrong residue are rejected")
    {
        const auto a = build_array(3, 7);
        CHECK_THROWS_AS(bezout_from_column(a, 0), std::invalid_argument);
        CHECK_THROWS_AS(bezout_complement_from_column(a, 0), std::invalid_argument);
    }

    TEST_CASE("certifies detects overflow and wrong identities")
    {
        CHECK(BezoutSolution{5, -2, 1}.certifies(3, 7));
        CHECK_FALSE(BezoutSolution{5, 2, 1}.certifies(3, 7));
        CHECK_FALSE(BezoutSolution{std::numeric_limits<Integer>::max(), 0, 1}.certifies(3, 7));
    }

    TEST_CASE("every gcd column and every n - gcd column certifies")
    {
        for (Integer n = 1; n <= property_limit; ++n)
        {
            for (Integer k = 1; k <= n; ++k)
            {
                const auto a = build_array(k, n);
                const auto g = brute_gcd(k, n);
                const auto primary = bezout_primary(a);
                REQUIRE(primary.g == g);
                REQUIRE(primary.a * k + primary.b * n == g);
                for (std::size_t j = 0; j < a.width(); ++j)
                {
                    const Integer r = a.residue_row()[j];
                    if (r == g && k < n)
                    {
                        const auto s = bezout_from_column(a, j);
                        REQUIRE(s.a * k + s.b * n == g);
                    }
                    if (r == n - g && 0 < r)
                    {
                        const auto s = bezout_complement_from_column(a, j);
                        REQUIRE(s.a * k + s.b * n == g);
                    }
                }
                if (k < n)
                {
                    const auto s = bezout_complement(a);
                    REQUIRE(s.a * k + s.b * n == g);
                }
            }
        }
    }
}

TEST_SUITE("gcd_streaming")
{
    TEST_CASE("worked examples")
    {
        const auto coprime = gcd_streaming(3, 7);
        CHECK(coprime.g == 1);
        CHECK(coprime.termination == Termination::unit_residue_shortcut);
        CHECK(coprime.columns_computed <= 8);
        // residues 4, 0, 3, 6: the fourth is n - 1
        CHECK(coprime.columns_computed == 4);

        const auto composite = gcd_streaming(4, 6);
        CHECK(composite.g == 2);
        CHECK(composite.termination == Termination::first_repeat);
        CHECK(composite.columns_computed == 4);

        const auto zero = gcd_streaming(0, 9);
        CHECK(zero.g == 9);
        CHECK(zero.termination == Termination::first_repeat);
        CHECK(zero.columns_computed == 2);
    }

    TEST_CASE("n = 1 only repeats at full width")
    {
        for (Integer k : {0, 1})
        {
            const auto r = gcd_streaming(k, 1);
            CHECK(r.g == 1);
            CHECK(r.termination == Termination::full_width);
            CHECK(r.columns_computed == 2);
        }
    }

    TEST_CASE("large modulus stays exact")
    {
        const auto r = gcd_streaming(max_modulus - 1, max_modulus);
        CHECK(r.g == 1);
        CHECK(r.termination == Termination::unit_residue_shortcut);
        CHECK(r.columns_computed == 1);

        const Integer half = (max_modulus - 1) / 2;
        const auto a = build_reduced_array(half, max_modulus - 1);
        CHECK(to_row(a.residue_row()) == Row{half, 0, half});
        CHECK(a.integer_row()[2] == half);
        CHECK(gcd_of(a) == half);
    }

    TEST_CASE("termination names")
    {
        CHECK(to_string(Termination::unit_residue_shortcut) == "unit-residue-shortcut");
        CHECK(to_string(Termination::first_repeat) == "first-repeat");
        CHECK(to_string(Termination::full_width) == "full-width");
    }

    TEST_CASE("agrees with the array for every pair up to 256")
    {
        for (Integer n = 1; n <= property_limit; ++n)
        {
            for (Integer k = 0; k <= n; ++k)
            {
                const auto r = gcd_streaming(k, n);
                REQUIRE(r.g == gcd_of(build_array(k, n)));
                REQUIRE(r.columns_computed <= static_cast<std::size_t>(n + 1));
                if (r.termination == Termination::first_repeat)
                {
                    REQUIRE(r.columns_computed == static_cast<std::size_t>(n / r.g + 1));
                }
            }
        }
    }
}
