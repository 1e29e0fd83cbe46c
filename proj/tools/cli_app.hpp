#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qg::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Desk-scale bounds per subcommand; out-of-range values are usage errors.
struct Bound {
    const char *what;
    int lo, hi;
};

const std::vector<Bound> &bounds();

// args excludes the program name; JSON/DOT/text goes to out, diagnostics to err
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qg::cli
