#pragma once

#include "thermoflow/bowen.hpp"
#include "thermoflow/potential.hpp"
#include "thermoflow/pressure.hpp"

#include <utility>
#include <vector>

namespace thermoflow {

// Observable on the suspension space: above each admissible base word the
// function is a polynomial in the flow time t, evaluated on [0, roof(word)].
// Polynomials keep every integral over fibers exact, so the only way the
// observable enters any formula (through delta_transform) carries no
// quadrature error.
class FiberPotential {
public:
    static constexpr int kMaxDegree = 8;

    // coeffs[w] = {c0, c1, ...}: the polynomial c0 + c1 t + ... over word w.
    FiberPotential(Sft sft, int depth, std::vector<std::vector<double>> coeffs);

    static FiberPotential constant(const Sft& sft, double c);
    static FiberPotential zero(const Sft& sft) { return constant(sft, 0.0); }

    const Sft& sft() const noexcept { return sft_; }
    int depth() const noexcept { return depth_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    const std::vector<std::vector<double>>& coeffs() const noexcept { return coeffs_; }

    double eval(std::size_t word_index, double t) const;

    FiberPotential refine(int new_depth) const;

private:
    Sft sft_;
    int depth_;
    std::vector<Word> words_;
    std::vector<std::vector<double>> coeffs_;
};

FiberPotential fiber_combine(const FiberPotential& g, const FiberPotential& h, double alpha,
                             double beta);
FiberPotential fiber_plus_constant(const FiberPotential& g, double c);

// Flow-invariant probability measure in its base presentation: the measure is
// the normalized product of the base Markov measure with Lebesgue time, so
// base + roof + normalizer determine it completely.
struct FlowMeasure {
    MarkovMeasure base;
    Roof roof;
    double normalizer; // integral of the roof against the base measure
};

// base measure -> flow measure (the measure-correspondence direction that is
// actually computable; the inverse is just reading the `base` field).
FlowMeasure lift(const MarkovMeasure& mu, const Roof& roof);

// Entropy of the flow measure: base entropy divided by the mean return time.
double abramov_entropy(const FlowMeasure& nu);

// delta(w) = integral of g(w, t) dt over [0, roof(w)], via the exact
// polynomial antiderivative. delta of the constant 1 is the roof, bit for bit.
LcPotential delta_transform(const FiberPotential& g, const Roof& roof);

// Integral of g against the flow measure: integrate(delta_g, base)/normalizer.
double kac_integral(const FiberPotential& g, const FlowMeasure& nu);

// The unique root of P(delta_g - t * roof) = 0.
BowenSolution flow_pressure(const FiberPotential& g, const Roof& roof);

// Flow topological entropy: the root of P(-t * roof) = 0.
BowenSolution flow_entropy(const Roof& roof);

// Measure of maximal entropy of the flow: the lift of the equilibrium measure
// of -h * roof, where h is the flow entropy.
FlowMeasure flow_mme(const Roof& roof);

// Size of the time reparametrization between two roofs over the same base:
// (sup |r1 - r2|, sup |r2/r1 - 1|), computed wordwise at the common depth.
std::pair<double, double> reparam_distance(const Roof& roof1, const Roof& roof2);

} // namespace thermoflow
