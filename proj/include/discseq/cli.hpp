#pragma once

#include <string>
#include <vector>

namespace discseq::cli {

/// Dispatch one command line. Subcommands: construct (line | horocycle | pack),
/// verify, partition, sum (carleson | theorem1 | theorem2 | divergence, or a
/// raw --terms table), transport. Returns 0 on success, 1 on domain/math
/// errors, 2 on usage errors.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

} // namespace discseq::cli
