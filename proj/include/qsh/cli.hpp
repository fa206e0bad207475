// Command-line front end. Exit codes: 0 success, 1 mathematical failure
// (validation or axiom counterexample), 2 input error.
#ifndef QSH_CLI_HPP
#define QSH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qsh::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsh::cli

#endif
