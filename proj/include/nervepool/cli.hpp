#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nervepool {

// Command dispatch for the nervepool tool. Exit status: 0 on success, 1 on
// usage or input errors, 2 on verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nervepool
