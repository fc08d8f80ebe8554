#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pmfgalois/json_io.hpp"

namespace pmfgalois::cli {

// Exit codes: 0 positive verdict, 1 negative verdict with certificate, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Flattened "path: value" lines, one scalar per line.
std::string render_text(const Json& j);

}  // namespace pmfgalois::cli
