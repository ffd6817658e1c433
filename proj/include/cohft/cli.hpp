#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohft {

// Batch front end. Returns the process exit code: 0 on success, 2 on
// validation errors (machine-readable JSON on err), 3 on internal errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohft
