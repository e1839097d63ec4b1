#pragma once

#include <string>
#include <vector>

#include "homnambu/document.hpp"

namespace homnambu {

/* Built-in example documents, generated in code; `homnambu examples
 * --write-dir` serializes them and tests compare disk copies against
 * these generators. */
std::vector<std::string> fixture_names();
AlgebraDocument make_fixture(const std::string& name);  // UnknownName

}  // namespace homnambu
