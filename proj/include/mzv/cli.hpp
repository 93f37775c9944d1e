#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

// argv-style arguments, program name excluded. Text report goes to out,
// diagnostics to err. Exit code: 0 all cells pass, 1 at least one cell
// failed, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
