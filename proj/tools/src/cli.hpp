#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sqmv::cli {

// Exit status: 0 valid / accepted, 1 countermodel / rejected, 2 usage or
// input error. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// $SQMV_FIXTURES, else the source tree's fixtures directory.
std::string fixture_dir();

}  // namespace sqmv::cli
