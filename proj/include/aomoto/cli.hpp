#ifndef AOMOTO_CLI_HPP
#define AOMOTO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace aomoto {

/// Batch frontend; returns the process exit status (0 success, 1 failed
/// validation, 2 usage error). Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace aomoto

#endif
