#ifndef NICEGEN_CLI_HPP
#define NICEGEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nicegen {

/// Exit codes: 0 success, 1 generation failed, 2 flag/parse errors,
/// 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nicegen

#endif
