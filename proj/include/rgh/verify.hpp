#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rgh/signature.hpp"

namespace rgh {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The release gate's fixed signature list.
const std::vector<Signature>& standard_suite();

// Runs every release check in order; each result line is self-contained.
// `progress` (optional) receives coarse status updates while heavy
// signatures are being enumerated.
std::vector<CheckResult> run_standard_suite(
    int threads, const std::function<void(const std::string&)>& progress = {});

std::string format_check_line(const CheckResult& check, std::size_t total);

} // namespace rgh
