#ifndef BEREZIN_CLI_HPP
#define BEREZIN_CLI_HPP

#include <iosfwd>

namespace berezin {

// Command-line front end. Exit codes: 0 = computed / identity verified,
// 1 = an identity check failed (details on `err`), 2 = usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace berezin

#endif
