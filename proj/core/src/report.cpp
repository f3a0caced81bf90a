#include "thermoflow/report.hpp"

#include "thermoflow/model.hpp"

#include <cstdio>

namespace thermoflow {

void Report::add_residual(const std::string& name, double achieved, double tolerance) {
    const bool pass = achieved <= tolerance;
    residuals.push_back({name, achieved, tolerance, pass});
    ok = ok && pass;
}

std::string Report::to_text() const {
    std::string out;
    out += "# thermoflow " + command_echo + "\n";
    char digest[32];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(model_digest));
    out += "# model digest: fnv1a64:" + std::string(digest) + "\n";
    if (seed) out += "# seed: " + std::to_string(*seed) + "\n";
    for (const auto& [name, value] : scalars) out += name + " = " + format17(value) + "\n";
    if (!residuals.empty()) {
        out += "# residuals: name achieved tolerance status\n";
        for (const auto& r : residuals)
            out += "resid " + r.name + " " + format17(r.achieved) + " " +
                   format17(r.tolerance) + (r.ok ? " ok" : " FAIL") + "\n";
    }
    for (const auto& n : notes) out += "# " + n + "\n";
    out += std::string("# status: ") + (ok ? "ok" : "error") + "\n";
    return out;
}

std::string Report::to_csv() const {
    std::string out = "name,value\n";
    for (const auto& [name, value] : scalars) out += name + "," + format17(value) + "\n";
    return out;
}

} // namespace thermoflow
