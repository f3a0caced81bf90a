#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace thermoflow {

// Deterministic computation report: identical inputs and seed produce a
// byte-identical text rendering. All reals print with 17 significant digits.
struct Report {
    struct Residual {
        std::string name;
        double achieved;
        double tolerance;
        bool ok;
    };

    std::string command_echo;
    std::uint64_t model_digest = 0;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<Residual> residuals;
    std::vector<std::string> notes;
    bool ok = true;

    void add(const std::string& name, double value) { scalars.emplace_back(name, value); }
    void add_residual(const std::string& name, double achieved, double tolerance);

    std::string to_text() const;
    // Fixed header "name,value", one row per named scalar.
    std::string to_csv() const;
};

} // namespace thermoflow
