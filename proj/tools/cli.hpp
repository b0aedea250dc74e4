#pragma once

// The qseries command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

#include "qseries/scalar.hpp"

namespace qseries::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kDivergence = 3 };

/// "re", "re+imi", "re-imi" or "imi".
Scalar parse_complex(const std::string& text);
/// Comma-separated complex values; the empty string is the empty list.
std::vector<Scalar> parse_list(const std::string& text);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseries::cli
