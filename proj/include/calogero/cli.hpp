// Command-line front end. run() takes the arguments without the program
// name and returns the process exit code: 0 on success, 1 when a
// verification fails, 2 on invalid flags or requests.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace calogero {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace calogero
