#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lchkit {

// Exit status: 0 success, 1 domain error, 2 usage, I/O or syntax error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lchkit
