#ifndef PRIMEPART_CLI_HPP
#define PRIMEPART_CLI_HPP

namespace primepart {

// Exit codes: 0 success, 1 usage error, 2 computation error, 3 I/O error.
int run_cli(int argc, const char* const* argv);

} // namespace primepart

#endif
