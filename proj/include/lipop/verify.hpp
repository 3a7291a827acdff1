#pragma once

#include <iosfwd>
#include <string>

namespace lipop {

// Built-in property suites behind `lipop verify --suite <name>`:
// identities, norms, criteria, equivalence.  Prints one line per check and a
// summary; returns true when every check passed.  If LIPOP_VERIFY_TOL is set
// it replaces every tolerance used by the checks.
bool run_verify_suite(const std::string& suite, std::ostream& os);

} // namespace lipop
