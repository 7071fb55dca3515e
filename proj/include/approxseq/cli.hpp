#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace approxseq::cli {

/// Dispatches one command. JSON/CSV results go to `out` (or the file
/// named by --out); one-line human summaries and diagnostics go to
/// `err`. Returns 0 on success, 1 when a check/attestation fails or a
/// counterexample is found, 2 on input or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace approxseq::cli
