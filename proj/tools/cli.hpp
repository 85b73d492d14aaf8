#pragma once

#include "coxsupport/support.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coxsupport::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  ///< internal error or failed --verify
constexpr int kExitUsage = 2;
constexpr int kExitScope = 3;

/// Runs one command line (args exclude the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Standalone SVG 1.1 drawing of Sigma within [lo, hi]^2 with an optional
/// highlighted query point.
std::string sigma_svg(const CoxeterType& w, const Rational& lo, const Rational& hi,
                      const std::optional<ParamPair>& query);

}  // namespace coxsupport::cli
