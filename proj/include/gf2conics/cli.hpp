#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2conics {

/// Command-line front end. Subcommands: trace-table, classify, pencil-scan,
/// verify-note. Data goes to out, diagnostics to err.
/// Returns 0 on success, 1 when a verification assertion fails or a
/// counterexample is found, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gf2conics
