#ifndef MULTIPOLY_LP_IO_HPP
#define MULTIPOLY_LP_IO_HPP

#include <string>
#include <string_view>
#include <utility>

#include "multipoly/system.hpp"

namespace multipoly {

/// LP-file text (Maximize / Subject To / Bounds / End). Rows and the
/// objective are rendered with integer coefficients: a row with fractional
/// entries is multiplied by the least positive integer that clears the
/// denominators (same halfspace), and an objective scale factor is recorded
/// in a comment header. Scaling past `max_scale_digits` raises
/// RequiresScaling.
std::string emit_lp(const InequalitySystem& system, const Objective& objective,
                    int max_scale_digits = 64);

struct ParsedLp {
  InequalitySystem system;
  Objective objective;
};

/// Reads the subset of the LP format emit_lp produces.
ParsedLp parse_lp(std::string_view text);

/// Objective files: one `node <id> <p[/q]>` or `edge <id> <id>... <p[/q]>`
/// line per term; `#` starts a comment.
Objective parse_objective(std::string_view text);
std::string serialize_objective(const Objective& objective);

/// {"variables":[...], "rows":[{"coeffs":{...},"rhs":"p/q","tag":"r5"}]}
/// with rationals as decimal strings.
std::string system_to_json(const InequalitySystem& system);
InequalitySystem system_from_json(std::string_view text);

}  // namespace multipoly

#endif
