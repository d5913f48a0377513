#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace codb::cli {

enum Exit : int {
  kOk = 0,
  kParse = 1,       // ParseError, UnboundName, bad usage
  kInvalid = 2,     // shape or relevance failure
  kOutOfFuel = 3,
};

/// args excludes the program name. Terms go to out, diagnostics to err.
/// With several input terms every term is processed; the first failing
/// term's code is returned.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codb::cli
