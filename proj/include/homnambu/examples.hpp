#pragma once

#include <string>
#include <vector>

#include "homnambu/fixtures.hpp"

namespace homnambu {

/* End-to-end scenario per fixture: every step states its expected
 * outcome and the line records expected vs observed.  `ok` is true only
 * when every step matched. */
struct SuiteResult {
    bool ok = true;
    std::vector<std::string> lines;

    std::string text() const;
};

SuiteResult run_example_scenario(const std::string& fixture);  // UnknownName
SuiteResult run_example_suite();

}  // namespace homnambu
