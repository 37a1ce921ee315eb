#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clawtile {

/// Entry point behind the `clawtile` executable. Subcommands: run, perf,
/// convergence, dump. Returns a process exit code; never throws.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clawtile
