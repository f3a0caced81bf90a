#pragma once

#include "thermoflow/potential.hpp"
#include "thermoflow/pressure.hpp"
#include "thermoflow/suspension.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thermoflow {

// Certificate for membership in the class of strictly positive potentials
// whose sup lies strictly below their pressure. Constants c > 0 always
// qualify under the standing assumptions (positive topological entropy).
struct PressureGapCertificate {
    bool in_class;
    double sup_value;
    double pressure_value;
    double min_value;
};

PressureGapCertificate pressure_gap(const LcPotential& p);

// Roof tau = P(p) - p for p with a positive pressure gap. By construction
// P(-tau) = 0, so the associated suspension flow has entropy exactly 1; both
// facts are re-verified before the roof is returned.
Roof zero_pressure_roof(const LcPotential& p);

// phi = P(f) - f: the normalization making P(-phi) = 0. Equilibrium states of
// -phi are exactly those of f, so the normalization changes nothing but the
// pressure level.
LcPotential zero_pressure_normalize(const LcPotential& f);

struct ResidualEntry {
    double achieved;
    double tolerance;
    bool ok() const { return achieved <= tolerance; }
};

// Outcome of a perturbation: the produced object, the quantity that the
// construction preserves (before/after), the sup-distance to the input, and
// every verified identity with its achieved residual.
struct PerturbationReport {
    std::optional<Roof> roof_out;
    std::optional<FiberPotential> fiber_out;
    std::string preserved_name;
    double preserved_before = 0.0;
    double preserved_after = 0.0;
    double distance = 0.0;
    double shift_constant = 0.0; // fiber case: the positivity shift C
    std::map<std::string, ResidualEntry> residuals;

    bool ok() const {
        for (const auto& [name, r] : residuals)
            if (!r.ok()) return false;
        return true;
    }
};

// Entropy-preserving roof perturbation: tau' = tau + (phi - h*tau)/h with
// h the flow entropy of tau. Requires P(-phi) = 0 (to 1e-10) and phi > 0.
// The recorded distance is ||phi - h*tau||_0 / h, which is the exact value
// of ||tau' - tau||_0 by the algebraic simplification tau' = phi/h.
PerturbationReport perturb_roof(const Roof& roof, const LcPotential& phi);

// Pressure-preserving perturbation of a flow observable. Shifts g by C so
// the integrand is >= 1 on the sampled fibers, sets F = P0*roof - phi with
// P0 the flow pressure of the shifted observable, and returns
// (F / delta_{g0}) * g0 - C. The identity delta_{g_new} = F is certified in
// exact rational arithmetic (residual 0, no tolerance); pressure
// preservation and the sup-distance bound are verified numerically.
PerturbationReport perturb_fiber(const FiberPotential& g, const Roof& roof,
                                 const LcPotential& phi, double epsilon);

struct AlmostEquilibriaResult {
    std::vector<MarkovMeasure> measures;
    std::vector<double> margins; // h(mu) + integral - (P - epsilon), all > 0
};

// `count` pairwise-distinct ergodic Markov measures mu with
//   P(p) - epsilon < h(mu) + integral(p, mu).
// Produced as exact equilibria of p + delta*q for random small depth-2 q,
// shrinking delta geometrically until the inequality holds. Throws
// CannotSeparate (with the achieved count) if distinctness fails.
AlmostEquilibriaResult almost_equilibria(const LcPotential& p, double epsilon, int count,
                                         std::uint64_t seed);

} // namespace thermoflow
