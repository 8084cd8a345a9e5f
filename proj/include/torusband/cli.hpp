#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tb {

/// Run one CLI invocation (argv without the program name).  JSON results on
/// `out`, diagnostics on `err`.  Exit code: 0 success, 1 domain error /
/// verification mismatch, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tb
