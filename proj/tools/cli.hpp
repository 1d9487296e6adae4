#pragma once

#include "check.hpp"

#include <euclid/array.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

namespace euclid::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
};

/// Three right-aligned rows; the residue row has '<', '>' or '=' between
/// neighbouring entries.
std::string render_array(const EuclideanArray& array);

nlohmann::json array_json(const EuclideanArray& array);
nlohmann::json rhythm_json(Integer k, Integer n, std::string_view symbols);
nlohmann::json gcd_json(Integer k, Integer n, bool bezout);

/// "a*k + b*n = g"
std::string primary_equation(Integer k, Integer n, const BezoutSolution& s);
/// "b*n + a*k = g", keeping n first as in the complement identity.
std::string complement_equation(Integer k, Integer n, const BezoutSolution& s);

int check_command(Integer max, const check::Subject& subject, std::ostream& out, std::ostream& err);

/// Entry point behind main(); argv[0] is the program name.
int run(std::span<const char* const> args, std::ostream& out, std::ostream& err);

} // namespace euclid::cli
