#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttt {

// Exit codes: 0 success, 1 verification failure (identity mismatch),
// 2 usage or input error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ttt
