#pragma once

#include <euclid/array.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace euclid {

/// Notes order before rests; canonical_rotation relies on this.
enum class Beat : std::uint8_t
{
    note = 0,
    rest = 1,
};

inline constexpr std::string_view default_symbols = "x.";

/**
 * A binary rhythm of positive length. operator== compares positionally;
 * use cyclically_equal for equality up to rotation.
 */
class Rhythm
{
public:
    explicit Rhythm(std::vector<Beat> beats);

    /// `symbols` holds two distinct characters: note first, rest second.
    static Rhythm parse(std::string_view text, std::string_view symbols = default_symbols);

    std::size_t length() const noexcept { return beats_.size(); }
    std::span<const Beat> beats() const noexcept { return beats_; }
    Beat operator[](std::size_t i) const noexcept { return beats_[i]; }

    std::string str(std::string_view symbols = default_symbols) const;

    friend bool operator==(const Rhythm&, const Rhythm&) = default;

private:
    std::vector<Beat> beats_;
};

/// Throws std::invalid_argument unless `symbols` is two distinct characters.
void require_valid_symbols(std::string_view symbols);

enum class Mark : std::uint8_t
{
    ascent,
    descent,
    equal,
};

/// '<' ascent, '>' descent, '=' equal.
char mark_symbol(Mark mark) noexcept;

/// marks[i] describes the residue pair in columns i and i + 1.
using MarkSequence = std::vector<Mark>;

/// Marks for every adjacent pair of any integer row.
MarkSequence mark_row(std::span<const Integer> row);

/// Marks of a full array's residue row (n marks). Rejects reduced arrays.
MarkSequence mark(const EuclideanArray& array);

/// Note on every descent, rest otherwise; all notes for k = n.
Rhythm rhythm_of(const EuclideanArray& array);

/// One period from the reduced array's descents, tiled to length n.
Rhythm rhythm_from_reduced(const EuclideanArray& array);

/// Note on every ascent, rest otherwise.
Rhythm ascent_rhythm(const EuclideanArray& array);

/// Swaps notes and rests.
Rhythm complement(const Rhythm& rhythm);

/// Beat i of the result is beat (i + shift) mod length of the input.
Rhythm rotate(const Rhythm& rhythm, std::size_t shift);

bool cyclically_equal(const Rhythm& lhs, const Rhythm& rhs);

/// Lexicographically least rotation (note < rest).
Rhythm canonical_rotation(const Rhythm& rhythm);

/// Smallest p dividing the length with rotate(r, p) == r.
std::size_t minimal_period(const Rhythm& rhythm);

/// length / minimal_period. Equals gcd(k, n) for the rhythm of E(k, n).
std::size_t gcd_from_rhythm(const Rhythm& rhythm);

std::size_t note_count(const Rhythm& rhythm);

} // namespace euclid
