#pragma once

#include <string>

namespace ymick {

// Outcome of a verification: ok, or a short description of the first failure.
struct CheckResult {
    bool ok = true;
    std::string detail;
};

inline CheckResult check_pass() { return {}; }

inline CheckResult check_fail(std::string detail) { return {false, std::move(detail)}; }

}  // namespace ymick
