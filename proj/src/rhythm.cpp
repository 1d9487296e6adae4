#include <euclid/rhythm.hpp>

#include <algorithm>
#include <stdexcept>

namespace euclid {

namespace {

void require_full(const EuclideanArray& array)
{
    if (array.reduced())
    {
        throw std::invalid_argument("expected a full Euclidean array, got a reduced one");
    }
}

Rhythm beats_where(const MarkSequence& marks, Mark wanted)
{
    std::vector<Beat> beats(marks.size(), Beat::rest);
    for (std::size_t i = 0; i < marks.size(); ++i)
    {
        if (marks[i] == wanted)
        {
            beats[i] = Beat::note;
        }
    }
    return Rhythm(std::move(beats));
}

Rhythm all_notes(Integer n)
{
    return Rhythm(std::vector<Beat>(static_cast<std::size_t>(n), Beat::note));
}

} // namespace

Rhythm::Rhythm(std::vector<Beat> beats) : beats_(std::move(beats))
{
    if (beats_.empty())
    {
        throw std::invalid_argument("a rhythm needs at least one beat");
    }
}

void require_valid_symbols(std::string_view symbols)
{
    if (symbols.size() != 2 || symbols[0] == symbols[1])
    {
        throw std::invalid_argument("symbols must be two distinct characters (note, rest), got \"" +
                                    std::string(symbols) + "\"");
    }
}

Rhythm Rhythm::parse(std::string_view text, std::string_view symbols)
{
    require_valid_symbols(symbols);
    std::vector<Beat> beats;
    beats.reserve(text.size());
    for (const char c : text)
    {
        if (c == symbols[0])
        {
            beats.push_back(Beat::note);
        }
        else if (c == symbols[1])
        {
            beats.push_back(Beat::rest);
        }
        else
        {
            throw std::invalid_argument(std::string("unexpected rhythm symbol '") + c + "'");
        }
    }
    return Rhythm(std::move(beats));
}

std::string Rhythm::str(std::string_view symbols) const
{
    require_valid_symbols(symbols);
    std::string out;
    out.reserve(beats_.size());
    for (const Beat b : beats_)
    {
        out.push_back(b == Beat::note ? symbols[0] : symbols[1]);
    }
    return out;
}

char mark_symbol(Mark mark) noexcept
{
    switch (mark)
    {
    case Mark::ascent:
        return '<';
    case Mark::descent:
        return '>';
    case Mark::equal:
        return '=';
    }
    return '?';
}

MarkSequence mark_row(std::span<const Integer> row)
{
    MarkSequence marks;
    if (row.size() < 2)
    {
        return marks;
    }
    marks.reserve(row.size() - 1);
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
    {
        if (row[i] < row[i + 1])
        {
            marks.push_back(Mark::ascent);
        }
        else if (row[i] > row[i + 1])
        {
            marks.push_back(Mark::descent);
        }
        else
        {
            marks.push_back(Mark::equal);
        }
    }
    return marks;
}

MarkSequence mark(const EuclideanArray& array)
{
    require_full(array);
    return mark_row(array.residue_row());
}

Rhythm rhythm_of(const EuclideanArray& array)
{
    require_full(array);
    if (array.k() == array.n())
    {
        return all_notes(array.n());
    }
    return beats_where(mark(array), Mark::descent);
}

Rhythm rhythm_from_reduced(const EuclideanArray& array)
{
    if (!array.reduced())
    {
        throw std::invalid_argument("expected a reduced Euclidean array, got a full one");
    }
    if (array.k() == array.n())
    {
        return all_notes(array.n());
    }
    const Rhythm period = beats_where(mark_row(array.residue_row()), Mark::descent);
    const auto n = static_cast<std::size_t>(array.n());
    std::vector<Beat> beats;
    beats.reserve(n);
    while (beats.size() < n)
    {
        beats.insert(beats.end(), period.beats().begin(), period.beats().end());
    }
    return Rhythm(std::move(beats));
}

Rhythm ascent_rhythm(const EuclideanArray& array)
{
    return beats_where(mark(array), Mark::ascent);
}

Rhythm complement(const Rhythm& rhythm)
{
    std::vector<Beat> beats(rhythm.beats().begin(), rhythm.beats().end());
    for (Beat& b : beats)
    {
        b = b == Beat::note ? Beat::rest : Beat::note;
    }
    return Rhythm(std::move(beats));
}

Rhythm rotate(const Rhythm& rhythm, std::size_t shift)
{
    std::vector<Beat> beats(rhythm.beats().begin(), rhythm.beats().end());
    std::rotate(beats.begin(), beats.begin() + static_cast<std::ptrdiff_t>(shift % beats.size()), beats.end());
    return Rhythm(std::move(beats));
}

bool cyclically_equal(const Rhythm& lhs, const Rhythm& rhs)
{
    return lhs.length() == rhs.length() && canonical_rotation(lhs) == canonical_rotation(rhs);
}

Rhythm canonical_rotation(const Rhythm& rhythm)
{
    // Two-candidate minimum rotation search, O(n).
    const auto s = rhythm.beats();
    const std::size_t n = s.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t matched = 0;
    while (i < n && j < n && matched < n)
    {
        const Beat a = s[(i + matched) % n];
        const Beat b = s[(j + matched) % n];
        if (a == b)
        {
            ++matched;
            continue;
        }
        if (a > b)
        {
            i += matched + 1;
        }
        else
        {
            j += matched + 1;
        }
        if (i == j)
        {
            ++j;
        }
        matched = 0;
    }
    return rotate(rhythm, std::min(i, j));
}

std::size_t minimal_period(const Rhythm& rhythm)
{
    // Prefix function: the shortest border-free shift is n - pi[n-1]; it is a
    // rotation period only when it divides n.
    const auto s = rhythm.beats();
    const std::size_t n = s.size();
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i)
    {
        std::size_t len = pi[i - 1];
        while (len > 0 && s[i] != s[len])
        {
            len = pi[len - 1];
        }
        if (s[i] == s[len])
        {
            ++len;
        }
        pi[i] = len;
    }
    const std::size_t shortest = n - pi[n - 1];
    return n % shortest == 0 ? shortest : n;
}

std::size_t gcd_from_rhythm(const Rhythm& rhythm)
{
    return rhythm.length() / minimal_period(rhythm);
}

std::size_t note_count(const Rhythm& rhythm)
{
    return static_cast<std::size_t>(std::count(rhythm.beats().begin(), rhythm.beats().end(), Beat::note));
}

} // namespace euclid
