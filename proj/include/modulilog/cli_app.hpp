#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modulilog {

// Runs the command-line front end. Exit code 0 on success, 1 on a domain
// error (structured JSON on the error stream, human text when it is a tty),
// 2 on a usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err,
            bool err_is_tty = false);

} // namespace modulilog
