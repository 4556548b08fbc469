#ifndef MUSICO_CLI_H
#define MUSICO_CLI_H

#include <iosfwd>
#include <string_view>

#include "musico/search.h"

namespace musico {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

/// Parses "chromatic,wholetone:C#:open,..." into cycles.
ConstraintSet parse_constraints(std::string_view text);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace musico

#endif  // MUSICO_CLI_H
