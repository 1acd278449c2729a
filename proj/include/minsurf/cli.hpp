#pragma once

#include <iosfwd>

namespace minsurf {

/// Subcommands eval, verify, mesh, figure. Returns 0 on success, 1 when a
/// verification campaign fails, 2 on argument or parameter errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace minsurf
