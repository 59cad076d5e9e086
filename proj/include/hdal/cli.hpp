#pragma once

#include <ostream>

namespace hdal {

/// Runs one command line. Exit status 0 on success, 1 on a domain error
/// (a JSON error record is written to `out`), 2 on usage or parse errors.
int runCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hdal
