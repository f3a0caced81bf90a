#include "thermoflow/bowen.hpp"

#include "thermoflow/errors.hpp"
#include "thermoflow/pressure.hpp"

#include <algorithm>
#include <cmath>

namespace thermoflow {

namespace {

// The certified contract is |P| <= 1e-10; the solver aims two decades lower
// so that root positions (error = residual / roof integral) keep their own
// 1e-10 scale guarantees even for roofs near the 0.5 floor.
constexpr double kResidualTol = 1e-12;
constexpr int kMaxEvals = 400;

struct Probe {
    double value;    // P(delta - t*roof)
    double roof_int; // integral of the roof against the equilibrium at t
};

Probe probe(const BowenProblem& pb, double t) {
    PressureResult pr = pressure(combine(pb.delta, pb.roof.potential(), 1.0, -t));
    MarkovMeasure mu = equilibrium_from(pr);
    return {pr.value, integrate(pb.roof.potential(), mu)};
}

} // namespace

BowenProblem make_bowen_problem(const LcPotential& delta, const Roof& roof) {
    if (delta.sft() != roof.sft())
        throw MismatchedSft("delta and roof live over different shifts");
    const int k = std::max(delta.depth(), roof.depth());
    return BowenProblem{delta.refine(k), roof.refine(k)};
}

double pressure_at(const BowenProblem& problem, double t) {
    return pressure(combine(problem.delta, problem.roof.potential(), 1.0, -t)).value;
}

BowenSolution bowen_solve(const BowenProblem& pb) {
    const double h = topological_entropy(pb.delta.sft());
    const double min_d = pb.delta.min_value();
    const double max_d = pb.delta.max_value();
    const double min_r = pb.roof.min_value();
    const double max_r = pb.roof.max_value();

    double lo = (h + min_d) / max_r;
    double hi = (h + max_d) / min_r;
    const double slack = 1e-6 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));
    lo -= slack;
    hi += slack;

    int evals = 0;
    auto eval = [&](double t) {
        ++evals;
        return probe(pb, t);
    };

    Probe f_lo = eval(lo);
    Probe f_hi = eval(hi);
    for (int grow = 0; (f_lo.value < 0.0 || f_hi.value > 0.0) && grow < 64; ++grow) {
        const double width = std::max(hi - lo, 1.0);
        if (f_lo.value < 0.0) {
            lo -= width;
            f_lo = eval(lo);
        }
        if (f_hi.value > 0.0) {
            hi += width;
            f_hi = eval(hi);
        }
    }
    if (f_lo.value < 0.0 || f_hi.value > 0.0)
        throw BracketFailure("could not bracket the root of the pressure equation");

    if (std::fabs(f_lo.value) <= kResidualTol)
        return {lo, lo, hi, std::fabs(f_lo.value), evals};
    if (std::fabs(f_hi.value) <= kResidualTol)
        return {lo, lo, hi, std::fabs(f_hi.value), evals};

    double t_prev = (std::fabs(f_lo.value) <= std::fabs(f_hi.value)) ? lo : hi;
    Probe f_prev = (t_prev == lo) ? f_lo : f_hi;

    while (evals < kMaxEvals) {
        // Newton step from the best point so far; dP/dt = -roof integral.
        double t_next = t_prev + f_prev.value / f_prev.roof_int;
        if (!(t_next > lo) || !(t_next < hi)) t_next = 0.5 * (lo + hi);
        Probe f_next = eval(t_next);
        if (std::fabs(f_next.value) <= kResidualTol)
            return {t_next, lo, hi, std::fabs(f_next.value), evals};
        if (f_next.value > 0.0)
            lo = t_next;
        else
            hi = t_next;
        t_prev = t_next;
        f_prev = f_next;
        if (!(hi - lo > 0.0))
            throw BracketFailure("bracket collapsed before meeting the residual tolerance");
    }
    throw BracketFailure("root refinement exceeded the evaluation budget");
}

} // namespace thermoflow
