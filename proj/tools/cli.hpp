#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rackkit::cli {

/// Runs the command line `args` (without the program name). Returns 0 when
/// every requested verification passes, 2 on a verification failure and 1
/// on usage or input errors. The JSON report goes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rackkit::cli
