#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rclkit {

/// Exit codes: 0 ok, 1 checked and found failing, 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rclkit
