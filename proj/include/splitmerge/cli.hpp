#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splitmerge {

// Command-line front end. Parses args (argv[0] excluded in the vector
// overload), runs the chosen subcommand, and writes results to `out` or to
// the path given by --out. Exit status: 0 success, 2 usage error,
// 3 capacity violation, 4 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace splitmerge
