#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rnaposet {

// Exit codes: 0 success, 1 verification failure, 2 parse error, 3 resource cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace rnaposet
