#include <euclid/array.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace euclid {

namespace {

std::string pair_text(Integer k, Integer n)
{
    return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

bool is_unit_residue(Integer residue, Integer n) noexcept
{
    return residue > 0 && (residue == 1 || residue == n - 1);
}

std::size_t leftmost_with_residue(const EuclideanArray& array, Integer residue)
{
    const auto row = array.residue_row();
    const auto it = std::find(row.begin(), row.end(), residue);
    if (it == row.end())
    {
        throw std::domain_error("no column carries residue " + std::to_string(residue) + " in E" +
                                pair_text(array.k(), array.n()));
    }
    return static_cast<std::size_t>(it - row.begin());
}

BezoutSolution certified(BezoutSolution solution, Integer k, Integer n)
{
    if (!solution.certifies(k, n))
    {
        throw std::logic_error("Bezout identity failed for " + pair_text(k, n));
    }
    return solution;
}

} // namespace

void require_valid_pair(Integer k, Integer n)
{
    if (n < 1)
    {
        throw std::domain_error("n must be positive " + pair_text(k, n));
    }
    if (n > max_modulus)
    {
        throw std::domain_error("n exceeds the supported maximum " + std::to_string(max_modulus) + " " +
                                pair_text(k, n));
    }
    if (k < 0 || k > n)
    {
        throw std::domain_error("k must satisfy 0 <= k <= n " + pair_text(k, n));
    }
}

EuclideanArray::EuclideanArray(Integer k, Integer n, bool reduced) : k_(k), n_(n), reduced_(reduced) {}

void EuclideanArray::push_column(Integer index)
{
    const Integer integer = k_ * index;
    index_row_.push_back(index);
    integer_row_.push_back(integer);
    residue_row_.push_back(floor_mod(integer, n_));
}

Column EuclideanArray::column(std::size_t j) const
{
    if (j >= width())
    {
        throw std::out_of_range("column " + std::to_string(j) + " outside array of width " +
                                std::to_string(width()));
    }
    return {index_row_[j], integer_row_[j], residue_row_[j]};
}

EuclideanArray build_array(Integer k, Integer n)
{
    require_valid_pair(k, n);
    EuclideanArray array(k, n, false);
    const auto width = static_cast<std::size_t>(n) + 1;
    array.index_row_.reserve(width);
    array.integer_row_.reserve(width);
    array.residue_row_.reserve(width);
    for (Integer index = -1; index < n; ++index)
    {
        array.push_column(index);
    }
    return array;
}

EuclideanArray build_reduced_array(Integer k, Integer n)
{
    require_valid_pair(k, n);
    EuclideanArray array(k, n, true);
    array.push_column(-1);
    // x -> x + k (mod n) is a bijection, so the residues form a pure cycle and
    // the first residue to repeat is the very first one.
    const Integer first = array.residue_row_.front();
    for (Integer index = 0;; ++index)
    {
        array.push_column(index);
        if (array.residue_row_.back() == first)
        {
            break;
        }
    }
    return array;
}

Integer gcd_of(const EuclideanArray& array)
{
    Integer least = array.n();
    for (const Integer residue : array.residue_row())
    {
        if (residue > 0)
        {
            least = std::min(least, residue);
        }
    }
    return least;
}

Integer max_positive_residue(const EuclideanArray& array)
{
    const auto row = array.residue_row();
    const Integer greatest = *std::max_element(row.begin(), row.end());
    if (greatest == 0)
    {
        throw std::domain_error("residue row of E" + pair_text(array.k(), array.n()) +
                                " has no positive entry");
    }
    return greatest;
}

bool BezoutSolution::certifies(Integer k, Integer n) const noexcept
{
    Integer lhs = 0;
    Integer rhs = 0;
    Integer sum = 0;
    if (__builtin_mul_overflow(a, k, &lhs) || __builtin_mul_overflow(b, n, &rhs) ||
        __builtin_add_overflow(lhs, rhs, &sum))
    {
        return false;
    }
    return sum == g;
}

BezoutSolution bezout_from_column(const EuclideanArray& array, std::size_t j)
{
    const Integer g = gcd_of(array);
    const Column c = array.column(j);
    if (c.residue != g)
    {
        throw std::invalid_argument("column " + std::to_string(j) + " has residue " +
                                    std::to_string(c.residue) + ", not gcd " + std::to_string(g));
    }
    return certified({c.index, (c.residue - c.integer) / array.n(), g}, array.k(), array.n());
}

BezoutSolution bezout_complement_from_column(const EuclideanArray& array, std::size_t j)
{
    const Integer n = array.n();
    const Integer g = gcd_of(array);
    const Column c = array.column(j);
    if (c.residue != n - g || c.residue == 0)
    {
        throw std::invalid_argument("column " + std::to_string(j) + " has residue " +
                                    std::to_string(c.residue) + ", not n - gcd = " +
                                    std::to_string(n - g));
    }
    return certified({-c.index, 1 + (c.integer - c.residue) / n, g}, array.k(), n);
}

BezoutSolution bezout_primary(const EuclideanArray& array)
{
    if (array.k() == 0)
    {
        throw std::domain_error("no column of E" + pair_text(array.k(), array.n()) +
                                " carries the gcd as a residue");
    }
    if (array.k() == array.n())
    {
        return certified({0, 1, array.n()}, array.k(), array.n());
    }
    return bezout_from_column(array, leftmost_with_residue(array, gcd_of(array)));
}

BezoutSolution bezout_complement(const EuclideanArray& array)
{
    if (array.k() == 0 || array.k() == array.n())
    {
        throw std::domain_error("complement Bezout solution needs 0 < k < n " +
                                pair_text(array.k(), array.n()));
    }
    return bezout_complement_from_column(array, leftmost_with_residue(array, array.n() - gcd_of(array)));
}

std::string_view to_string(Termination termination) noexcept
{
    switch (termination)
    {
    case Termination::unit_residue_shortcut:
        return "unit-residue-shortcut";
    case Termination::first_repeat:
        return "first-repeat";
    case Termination::full_width:
        return "full-width";
    }
    return "unknown";
}

GcdReport gcd_streaming(Integer k, Integer n)
{
    require_valid_pair(k, n);
    const std::size_t full_width = static_cast<std::size_t>(n) + 1;
    const Integer first = floor_mod(-k, n);
    Integer residue = first;
    Integer least = n;
    std::size_t columns = 1;
    for (;;)
    {
        if (is_unit_residue(residue, n))
        {
            return {1, columns, Termination::unit_residue_shortcut};
        }
        if (residue > 0)
        {
            least = std::min(least, residue);
        }
        if (columns > 1 && residue == first)
        {
            return {least, columns, columns == full_width ? Termination::full_width : Termination::first_repeat};
        }
        // exactly one of residue + k and residue - (n - k) lies in [0, n)
        residue = residue < n - k ? residue + k : residue - (n - k);
        ++columns;
    }
}

} // namespace euclid
