#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace euclid {

using Integer = std::int64_t;

/// Largest accepted modulus. With 64-bit intermediates, k * (n - 1) cannot
/// overflow for any 0 <= k <= n <= max_modulus.
inline constexpr Integer max_modulus = 2147483647;

/// Throws std::domain_error unless 0 <= k <= n and 1 <= n <= max_modulus.
void require_valid_pair(Integer k, Integer n);

/// Residue of `value` in [0, modulus), for modulus > 0.
constexpr Integer floor_mod(Integer value, Integer modulus) noexcept
{
    const Integer r = value % modulus;
    return r < 0 ? r + modulus : r;
}

/// Quotient rounded toward negative infinity, for divisor > 0.
constexpr Integer floor_div(Integer value, Integer divisor) noexcept
{
    const Integer q = value / divisor;
    return (value % divisor < 0) ? q - 1 : q;
}

struct Column
{
    Integer index;
    Integer integer;
    Integer residue;

    friend bool operator==(const Column&, const Column&) = default;
};

/**
 * The Euclidean array E(k, n): three rows holding the indices -1 .. n-1,
 * their multiples by k, and those multiples reduced into [0, n).
 *
 * A full array has n + 1 columns. A reduced array is built column by column
 * and ends with the first column whose residue repeats an earlier one, which
 * gives n / gcd(k, n) + 1 columns.
 *
 * Instances are only produced by build_array / build_reduced_array and are
 * immutable afterwards.
 */
class EuclideanArray
{
public:
    Integer k() const noexcept { return k_; }
    Integer n() const noexcept { return n_; }
    bool reduced() const noexcept { return reduced_; }
    std::size_t width() const noexcept { return residue_row_.size(); }

    std::span<const Integer> index_row() const noexcept { return index_row_; }
    std::span<const Integer> integer_row() const noexcept { return integer_row_; }
    std::span<const Integer> residue_row() const noexcept { return residue_row_; }

    Column column(std::size_t j) const;

    friend bool operator==(const EuclideanArray&, const EuclideanArray&) = default;

private:
    EuclideanArray(Integer k, Integer n, bool reduced);
    void push_column(Integer index);

    friend EuclideanArray build_array(Integer k, Integer n);
    friend EuclideanArray build_reduced_array(Integer k, Integer n);

    Integer k_;
    Integer n_;
    bool reduced_;
    std::vector<Integer> index_row_;
    std::vector<Integer> integer_row_;
    std::vector<Integer> residue_row_;
};

EuclideanArray build_array(Integer k, Integer n);
EuclideanArray build_reduced_array(Integer k, Integer n);

/// Least positive residue; n when the residue row is all zeros (k = 0 or k = n).
Integer gcd_of(const EuclideanArray& array);

/// Greatest positive residue, which is n - gcd(k, n). Throws std::domain_error
/// when no positive residue exists.
Integer max_positive_residue(const EuclideanArray& array);

/// Certificate a * k + b * n = g.
struct BezoutSolution
{
    Integer a;
    Integer b;
    Integer g;

    /// Exact check; false on overflow as well as on a wrong identity.
    bool certifies(Integer k, Integer n) const noexcept;

    friend bool operator==(const BezoutSolution&, const BezoutSolution&) = default;
};

/// Bezout solution read off column j, which must carry residue gcd(k, n):
/// a = index, b = (residue - integer) / n.
BezoutSolution bezout_from_column(const EuclideanArray& array, std::size_t j);

/// Bezout solution read off column j, which must carry residue n - gcd(k, n):
/// a = -index, b = 1 + (integer - residue) / n.
BezoutSolution bezout_complement_from_column(const EuclideanArray& array, std::size_t j);

/// Uses the leftmost column with residue gcd(k, n). For k = n, where no such
/// column exists, returns (0, 1, n). Throws std::domain_error for k = 0.
BezoutSolution bezout_primary(const EuclideanArray& array);

/// Uses the leftmost column with residue n - gcd(k, n). Requires 0 < k < n.
BezoutSolution bezout_complement(const EuclideanArray& array);

enum class Termination
{
    unit_residue_shortcut,
    first_repeat,
    full_width,
};

std::string_view to_string(Termination termination) noexcept;

struct GcdReport
{
    Integer g;
    std::size_t columns_computed;
    Termination termination;
};

/// Walks the residue row one column at a time with the add-k or
/// subtract-(n - k) step, keeping only the current residue.
GcdReport gcd_streaming(Integer k, Integer n);

} // namespace euclid
