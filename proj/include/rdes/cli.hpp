#ifndef RDES_CLI_HPP_
#define RDES_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace rdes {

/// Command-line front end. Exit codes: 0 when the command succeeds and every
/// gated verdict holds, 1 when a check fails or synthesis is unrealizable,
/// 2 for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace rdes

#endif // RDES_CLI_HPP_
