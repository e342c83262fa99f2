#ifndef WALKS_CLI_HPP
#define WALKS_CLI_HPP

#include <iosfwd>

namespace walks {

// Exit codes: 0 ok, 1 a word could not be transformed, 2 bad invocation,
// 3 a verification suite failed.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace walks

#endif
