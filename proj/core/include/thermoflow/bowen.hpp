#pragma once

#include "thermoflow/potential.hpp"

namespace thermoflow {

// The scalar equation P(delta - t * roof) = 0. The left side is strictly
// decreasing in t (slope at most -min(roof) < 0), so the root is unique.
struct BowenProblem {
    LcPotential delta;
    Roof roof;
};

// Refines both parts to a common depth; throws MismatchedSft.
BowenProblem make_bowen_problem(const LcPotential& delta, const Roof& roof);

struct BowenSolution {
    double t_star;
    double bracket_lo;
    double bracket_hi;
    double residual; // |P(delta - t_star * roof)|
    int iterations;  // pressure evaluations spent inside the solver
};

double pressure_at(const BowenProblem& problem, double t);

// Certified bisection with Newton acceleration. The initial bracket comes
// from the variational bounds h + min(delta) - t*max(roof) <= P <= h +
// max(delta) - t*min(roof); Newton steps use dP/dt = -integral of the roof
// against the equilibrium at t and fall back to bisection when they leave
// the bracket. Stops at residual <= 1e-10.
BowenSolution bowen_solve(const BowenProblem& problem);

} // namespace thermoflow
