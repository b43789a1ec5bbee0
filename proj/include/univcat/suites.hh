#ifndef UNIVCAT_GUARD_SUITES_HH
#define UNIVCAT_GUARD_SUITES_HH 1

#include <univcat/hom.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace univcat
{
    auto suite_names() -> std::vector<std::string>;

    /// Runs a bundled verification suite, writing a plain text report that
    /// ends with `RESULT: PASS <name>` or `RESULT: FAIL <name>`. Returns 0 on
    /// pass, 1 on any failed verdict, 2 for an unknown name or an error. A step
    /// limit that cuts a search short fails that verdict or aborts with 2.
    auto run_suite(const std::string & name, std::ostream & out, const EnumLimit & limit = {}) -> int;
}

#endif
