#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scr {

// args excludes the program name. Exit codes: 0 ok/valid, 1 refuted or
// disagreement, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scr
