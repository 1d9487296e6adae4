#include "cli.hpp"

#include "bench.hpp"

#include <euclid/rhythm.hpp>

#include <algorithm>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace euclid::cli {

namespace {

enum class Format
{
    text,
    json,
};

const std::map<std::string, Format> format_names{{"text", Format::text}, {"json", Format::json}};

std::string signed_term(Integer coefficient, Integer value)
{
    return std::to_string(coefficient) + "*" + std::to_string(value);
}

BezoutSolution primary_or_shortcut(const EuclideanArray& array)
{
    // gcd(0, n) = n has no column carrying it; 0*0 + 1*n = n stands in.
    if (array.k() == 0)
    {
        return {0, 1, array.n()};
    }
    return bezout_primary(array);
}

void add_pair(CLI::App& cmd, Integer& k, Integer& n)
{
    cmd.add_option("k", k, "note count / multiplier, 0 <= k <= n")->required();
    cmd.add_option("n", n, "beat count / modulus, n >= 1")->required();
}

void add_format(CLI::App& cmd, Format& format)
{
    cmd.add_option("--format", format, "output format: text or json")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
}

constexpr const char* footer = R"txt(Text formats:
  array   three aligned rows (index, integer, residue); the residue row
          carries '<' ascent, '>' descent, '=' equal between entries.
  rhythm  one line of n symbols, note then rest from --symbols (default "x.").
  gcd     the gcd on the first line; with --bezout, "a*k + b*n = g" from the
          leftmost gcd column, then (for 0 < k < n) "a*n + b*k = g" from the
          leftmost n-gcd column. For k = 0 the identity 0*0 + 1*n = n is shown.
  check   "all checks passed (P pairs)" or the first failing pair and invariant.
Exit codes: 0 success, 1 check failure, 2 usage or domain error.)txt";

} // namespace

std::string render_array(const EuclideanArray& array)
{
    const std::span<const Integer> rows[] = {array.index_row(), array.integer_row(), array.residue_row()};
    std::size_t cell = 1;
    for (const auto row : rows)
    {
        for (const Integer v : row)
        {
            cell = std::max(cell, std::to_string(v).size());
        }
    }
    const MarkSequence marks = mark_row(array.residue_row());

    std::ostringstream out;
    for (std::size_t r = 0; r < 3; ++r)
    {
        for (std::size_t j = 0; j < rows[r].size(); ++j)
        {
            if (j > 0)
            {
                out << ' ' << (r == 2 ? mark_symbol(marks[j - 1]) : ' ') << ' ';
            }
            out << std::setw(static_cast<int>(cell)) << rows[r][j];
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json array_json(const EuclideanArray& array)
{
    nlohmann::json marks = nlohmann::json::array();
    for (const Mark m : mark_row(array.residue_row()))
    {
        marks.push_back(std::string(1, mark_symbol(m)));
    }
    return {
        {"k", array.k()},
        {"n", array.n()},
        {"reduced", array.reduced()},
        {"index_row", std::vector<Integer>(array.index_row().begin(), array.index_row().end())},
        {"integer_row", std::vector<Integer>(array.integer_row().begin(), array.integer_row().end())},
        {"residue_row", std::vector<Integer>(array.residue_row().begin(), array.residue_row().end())},
        {"marks", marks},
    };
}

nlohmann::json rhythm_json(Integer k, Integer n, std::string_view symbols)
{
    const Rhythm rhythm = rhythm_of(build_array(k, n));
    return {
        {"k", k},
        {"n", n},
        {"rhythm", rhythm.str(symbols)},
        {"note_count", note_count(rhythm)},
        {"minimal_period", minimal_period(rhythm)},
        {"gcd", gcd_from_rhythm(rhythm)},
    };
}

std::string primary_equation(Integer k, Integer n, const BezoutSolution& s)
{
    return signed_term(s.a, k) + " + " + signed_term(s.b, n) + " = " + std::to_string(s.g);
}

std::string complement_equation(Integer k, Integer n, const BezoutSolution& s)
{
    return signed_term(s.b, n) + " + " + signed_term(s.a, k) + " = " + std::to_string(s.g);
}

nlohmann::json gcd_json(Integer k, Integer n, bool bezout)
{
    const GcdReport report = gcd_streaming(k, n);
    nlohmann::json doc = {
        {"k", k},
        {"n", n},
        {"gcd", report.g},
        {"termination", std::string(to_string(report.termination))},
        {"columns_computed", report.columns_computed},
    };
    if (!bezout)
    {
        return doc;
    }
    // The leftmost gcd and n-gcd columns both lie in the first period, so the
    // reduced array yields the same solutions as the full one.
    const EuclideanArray array = build_reduced_array(k, n);
    const BezoutSolution primary = primary_or_shortcut(array);
    doc["bezout_primary"] = {primary.a, primary.b};
    doc["bezout_primary_equation"] = primary_equation(k, n, primary);
    if (0 < k && k < n)
    {
        const BezoutSolution comp = bezout_complement(array);
        doc["bezout_complement"] = {comp.a, comp.b};
        doc["bezout_complement_equation"] = complement_equation(k, n, comp);
    }
    return doc;
}

int check_command(Integer max, const check::Subject& subject, std::ostream& out, std::ostream& err)
{
    const check::Report report = check::run(max, subject);
    if (report.passed())
    {
        out << "all checks passed (" << report.pairs << " pairs)\n";
        return exit_ok;
    }
    const auto& f = *report.failure;
    err << "check failed at (k=" << f.k << ", n=" << f.n << "): invariant " << f.invariant;
    if (!f.detail.empty())
    {
        err << " (" << f.detail << ")";
    }
    err << '\n';
    return exit_check_failed;
}

int run(std::span<const char* const> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Euclidean arrays: gcd, Bezout identities and Euclidean rhythms", "euclid"};
    app.footer(footer);
    app.require_subcommand(1);

    Integer k = 0;
    Integer n = 0;
    Format format = Format::text;
    bool reduced = false;
    bool bezout = false;
    std::string symbols(default_symbols);
    Integer check_max = 64;
    bench::Options bench_options;

    auto* array_cmd = app.add_subcommand("array", "print the Euclidean array E(k, n)");
    add_pair(*array_cmd, k, n);
    array_cmd->add_flag("--reduced", reduced, "stop one column after the first repeated residue");
    add_format(*array_cmd, format);

    auto* rhythm_cmd = app.add_subcommand("rhythm", "print the Euclidean rhythm of E(k, n)");
    add_pair(*rhythm_cmd, k, n);
    rhythm_cmd->add_option("--symbols", symbols, "two distinct characters: note then rest")->capture_default_str();
    add_format(*rhythm_cmd, format);

    auto* gcd_cmd = app.add_subcommand("gcd", "gcd(k, n) from the residue row");
    add_pair(*gcd_cmd, k, n);
    gcd_cmd->add_flag("--bezout", bezout, "also print Bezout identities read off the array");
    add_format(*gcd_cmd, format);

    auto* check_cmd = app.add_subcommand("check", "cross-validate against the oracles for 0 <= k <= n <= max");
    check_cmd->add_option("--max", check_max, "largest n")->capture_default_str()->check(CLI::PositiveNumber);

    auto* bench_cmd = app.add_subcommand("bench", "time the streaming array gcd against classic Euclid");
    bench_cmd->add_option("--max", bench_options.max, "largest n (>= 2)")->capture_default_str();
    bench_cmd->add_option("--samples", bench_options.samples, "number of pairs")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_options.seed, "random seed")->capture_default_str();

    try
    {
        app.parse(static_cast<int>(args.size()), args.data());
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try
    {
        if (*array_cmd)
        {
            const EuclideanArray array = reduced ? build_reduced_array(k, n) : build_array(k, n);
            if (format == Format::json)
            {
                out << array_json(array).dump() << '\n';
            }
            else
            {
                out << render_array(array);
            }
        }
        else if (*rhythm_cmd)
        {
            require_valid_symbols(symbols);
            if (format == Format::json)
            {
                out << rhythm_json(k, n, symbols).dump() << '\n';
            }
            else
            {
                out << rhythm_of(build_array(k, n)).str(symbols) << '\n';
            }
        }
        else if (*gcd_cmd)
        {
            const nlohmann::json doc = gcd_json(k, n, bezout);
            if (format == Format::json)
            {
                out << doc.dump() << '\n';
            }
            else
            {
                out << doc["gcd"].get<Integer>() << '\n';
                for (const char* key : {"bezout_primary_equation", "bezout_complement_equation"})
                {
                    if (doc.contains(key))
                    {
                        out << doc[key].get<std::string>() << '\n';
                    }
                }
            }
        }
        else if (*check_cmd)
        {
            return check_command(check_max, {}, out, err);
        }
        else if (*bench_cmd)
        {
            bench::print(out, bench::run(bench_options));
        }
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace euclid::cli
