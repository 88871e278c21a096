#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urbound {

/// Entry point shared by the urbound executable and the tests. `args` excludes
/// the program name. Returns 0 on success, 1 when a check or write fails and 2
/// for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urbound
