#pragma once

#include <string>
#include <vector>

namespace isoquot {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<std::string> suite_names();
// Runs one named suite, or every suite for "all". Unknown names are InvalidArgument.
std::vector<CheckResult> run_suite(const std::string& name);

} // namespace isoquot
