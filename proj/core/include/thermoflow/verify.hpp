#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thermoflow {

struct VerifyItem {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyResult {
    std::vector<VerifyItem> items;
    std::vector<std::string> notes;
    bool all_passed = true;
};

// Runs every module invariant with built-in fixtures and the given seed.
// Deterministic: identical seed, identical result.
VerifyResult run_verify(std::uint64_t seed);

// One line per item plus the notes and a summary; byte-identical across runs
// for a fixed seed.
std::string verify_report_text(const VerifyResult& result, std::uint64_t seed);

} // namespace thermoflow
