#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wph::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kInvalidInput = 2;      // syntax, schema, invariant or usage errors
constexpr int kUnsupported = 3;       // UnsupportedRing, NonInvertibleWeight
constexpr int kVerificationFailed = 4;

// Runs one invocation; args exclude the program name. Documents and tables go
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wph::cli
