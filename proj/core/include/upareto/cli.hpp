#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace upareto {

// Full command-line surface, in-process for testability. `args` excludes the
// program name. Returns 0 on success, 1 on domain errors (invalid input,
// guard violations), 2 on usage errors; diagnostics go to `err`, machine
// output to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace upareto
