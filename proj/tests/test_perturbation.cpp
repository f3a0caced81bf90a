#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thermoflow/errors.hpp"
#include "thermoflow/perturbation.hpp"
#include "thermoflow/sampling.hpp"

#include <cmath>

using namespace thermoflow;

namespace {
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("positive constants have a pressure gap") {
    const Sft s = full_shift(2);
    const PressureGapCertificate c = pressure_gap(LcPotential::constant(s, 1.0));
    CHECK(c.in_class);
    CHECK(c.sup_value == 1.0);
    CHECK(c.min_value == 1.0);
    CHECK(c.pressure_value == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-13));

    CHECK_FALSE(pressure_gap(LcPotential::constant(s, -1.0)).in_class);
}

TEST_CASE("the gap certificate reports the decisive numbers") {
    const Sft s = full_shift(2);
    // Large spread: P = log(e^10 + e^0.1), slightly above the sup.
    const PressureGapCertificate c = pressure_gap(LcPotential(s, 1, {10.0, 0.1}));
    const double expect = 10.0 + std::log1p(std::exp(0.1 - 10.0));
    CHECK(c.pressure_value == doctest::Approx(expect).epsilon(1e-12));
    CHECK(c.in_class == (c.sup_value < c.pressure_value - 1e-12 && c.min_value > 0.0));

    // Depth-2 spread where invariant averages cannot reach the sup: the
    // word 12 can appear at density at most 1/2, so P < 10 = sup.
    std::vector<double> v(4, 0.1);
    v[1] = 10.0;
    const PressureGapCertificate c2 = pressure_gap(LcPotential(s, 2, v));
    CHECK(c2.min_value > 0.0);
    CHECK(c2.pressure_value < c2.sup_value);
    CHECK_FALSE(c2.in_class);
}

TEST_CASE("zero pressure roofs from constants") {
    for (auto [sft, h] : {std::pair{full_shift(2), std::log(2.0)},
                          std::pair{full_shift(3), std::log(3.0)},
                          std::pair{golden_mean(), std::log(kGolden)}}) {
        const Roof tau = zero_pressure_roof(LcPotential::constant(sft, 1.0));
        for (double v : tau.potential().values())
            CHECK(v == doctest::Approx(h).epsilon(1e-13));
        CHECK(std::fabs(flow_entropy(tau).t_star - 1.0) <= 1e-8);
        CHECK(std::fabs(pressure(scale(tau.potential(), -1.0)).value) <= 1e-10);
    }
    CHECK_THROWS_AS(zero_pressure_roof(LcPotential::constant(full_shift(2), -1.0)), NotInL);
}

TEST_CASE("zero pressure normalization") {
    const Sft s = full_shift(2);
    const LcPotential phi = zero_pressure_normalize(LcPotential::zero(s));
    for (double v : phi.values()) CHECK(v == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(std::fabs(pressure(scale(phi, -1.0)).value) <= 1e-12);

    // Normalizing the negative of a zero-pressure roof returns the roof.
    const Roof tau = zero_pressure_roof(LcPotential::constant(s, 0.8));
    const LcPotential again = zero_pressure_normalize(scale(tau.potential(), -1.0));
    CHECK(sup_dist(again, tau.potential()) <= 1e-12);

    // Idempotence up to the pressure shift: normalize(-normalize(f)) = normalize(f).
    SplitMix64 rng(73);
    const LcPotential f = random_lc_potential(s, 2, -1.0, 1.0, rng);
    const LcPotential once = zero_pressure_normalize(f);
    const LcPotential twice = zero_pressure_normalize(scale(once, -1.0));
    CHECK(sup_dist(once, twice) <= 1e-9);
}

TEST_CASE("roof perturbation leaves the roof alone in the identity case") {
    SplitMix64 rng(79);
    const Sft s = golden_mean();
    const Roof roof = random_roof(s, 2, rng);
    const double h = flow_entropy(roof).t_star;
    // phi = h * tau, built through the same scaling path the solver uses.
    const LcPotential phi = combine(roof.potential(), roof.potential(), h, 0.0);
    const PerturbationReport rep = perturb_roof(roof, phi);
    REQUIRE(rep.roof_out.has_value());
    CHECK(rep.distance == 0.0);
    CHECK(rep.roof_out->potential().values() == roof.refine(2).potential().values());
    CHECK(rep.ok());
}

TEST_CASE("unit roof with phi = log 2 maps to itself on the full 2-shift") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential::constant(s, 1.0));
    const PerturbationReport rep =
        perturb_roof(roof, LcPotential::constant(s, std::log(2.0)));
    REQUIRE(rep.roof_out.has_value());
    for (double v : rep.roof_out->potential().values())
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::fabs(rep.preserved_after - rep.preserved_before) <= 1e-8);
}

TEST_CASE("roof perturbation tracks a concrete approximant") {
    // f is -log 2 except on the word 12 where it is -log 2 + delta.
    const Sft s = full_shift(2);
    const double delta = 0.01;
    std::vector<double> fv(4, -std::log(2.0));
    fv[1] += delta;
    const LcPotential phi = zero_pressure_normalize(LcPotential(s, 2, fv));
    CHECK(phi.min_value() > 0.0);

    const Roof roof(LcPotential::constant(s, 1.0));
    const PerturbationReport rep = perturb_roof(roof, phi);
    CHECK(rep.ok());
    CHECK(rep.distance <= 2.0 * delta / std::log(2.0));
    CHECK(std::fabs(rep.preserved_after - std::log(2.0)) <= 1e-8);

    // Recorded distance is the exact division form of the sup norm.
    const double h = rep.preserved_before;
    const double num = sup_norm(combine(phi, roof.potential(), 1.0, -h));
    CHECK(rep.distance == num / h);
}

TEST_CASE("roof perturbation rejects bad phi") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential::constant(s, 1.0));
    CHECK_THROWS_AS(perturb_roof(roof, LcPotential::constant(s, 1.0)), NotZeroPressure);
    CHECK_THROWS_AS(perturb_roof(roof, LcPotential::constant(s, -1.0)), NotPositive);
}

TEST_CASE("fiber perturbation identity case returns the observable unchanged") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential::constant(s, 1.0));
    const FiberPotential g = FiberPotential::constant(s, 3.0);
    // phi = P0 * roof - delta_{g}: with these inputs every step is exact.
    const LcPotential delta0 = delta_transform(g, roof);
    const double p0 = flow_pressure(g, roof).t_star;
    const LcPotential phi = combine(roof.potential(), delta0, p0, -1.0);

    const PerturbationReport rep = perturb_fiber(g, roof, phi, 0.25);
    REQUIRE(rep.fiber_out.has_value());
    CHECK(rep.shift_constant == 0.0);
    CHECK(rep.distance == 0.0);
    CHECK(rep.fiber_out->coeffs() == g.coeffs());
    CHECK(rep.residuals.at("delta_identity_exact").achieved == 0.0);
    CHECK(rep.ok());
}

TEST_CASE("fiber perturbation of the zero observable") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential::constant(s, 1.0));
    const LcPotential phi = LcPotential::constant(s, std::log(2.0));
    const PerturbationReport rep =
        perturb_fiber(FiberPotential::zero(s), roof, phi, 0.5);
    // min g = 0, so the shift is exactly 1 and P0 = log 2 + 1.
    CHECK(rep.shift_constant == 1.0);
    CHECK(rep.preserved_before == doctest::Approx(std::log(2.0) + 1.0).epsilon(1e-9));
    CHECK(std::fabs(rep.preserved_after - rep.preserved_before) <= 1e-8);
    CHECK(rep.residuals.at("delta_identity_exact").achieved == 0.0);
    // The emitted observable is constant with integral P0 - log 2 ~ 1.
    REQUIRE(rep.fiber_out.has_value());
    for (const auto& c : rep.fiber_out->coeffs())
        CHECK(c[0] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("fiber perturbation lands within epsilon for close approximants") {
    SplitMix64 rng(83);
    const Sft s = golden_mean();
    const Roof roof = random_roof(s, 1, rng);
    const FiberPotential g = random_fiber(s, 1, 2, 0.5, rng);

    // Build a zero-pressure phi near P0 roof - delta_{g0} by normalizing a
    // slightly bumped copy of the exact one.
    const int k = roof.depth();
    const FiberPotential gk = g.refine(k);
    double gmin = 1e300;
    const auto& rv = roof.potential().values();
    for (std::size_t w = 0; w < gk.coeffs().size(); ++w)
        for (int i = 0; i <= 1000; ++i) gmin = std::min(gmin, gk.eval(w, rv[w] * i / 1000));
    const FiberPotential g0 = fiber_plus_constant(gk, std::max(0.0, 1.0 - gmin));
    const LcPotential delta0 = delta_transform(g0, roof);
    const double p0 = flow_pressure(g0, roof).t_star;
    const LcPotential target = combine(roof.potential(), delta0, p0, -1.0);
    LcPotential bump = random_lc_potential(s, 1, -1e-4, 1e-4, rng);
    const LcPotential phi =
        zero_pressure_normalize(scale(combine(target, bump, 1.0, 1.0), -1.0));

    const PerturbationReport rep = perturb_fiber(g, roof, phi, 0.05);
    CHECK(rep.ok());
    CHECK(rep.distance < 0.05);
    CHECK(rep.residuals.count("epsilon_target") == 1);
    CHECK(std::fabs(rep.preserved_after - rep.preserved_before) <= 1e-8);
}

TEST_CASE("almost equilibria: the equilibrium is the first witness") {
    const Sft s = full_shift(2);
    const LcPotential zero = LcPotential::zero(s);
    const AlmostEquilibriaResult r = almost_equilibria(zero, 0.5, 1, 0);
    REQUIRE(r.measures.size() == 1);
    CHECK(r.measures[0].trans_sup_dist(equilibrium(zero)) == 0.0);
    CHECK(r.margins[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("almost equilibria separates five measures near the MME") {
    const Sft s = full_shift(2);
    const AlmostEquilibriaResult r = almost_equilibria(LcPotential::zero(s), 0.01, 5, 0);
    REQUIRE(r.measures.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(r.margins[i] > 1e-12);
        CHECK(entropy(r.measures[i]) > std::log(2.0) - 0.01);
        CHECK(r.measures[i].full_support());
        for (std::size_t j = 0; j < i; ++j)
            CHECK(r.measures[i].trans_sup_dist(r.measures[j]) >= 1e-6);
    }
}

TEST_CASE("huge epsilon admits anything, tiny epsilon fails loudly") {
    const Sft s = golden_mean();
    const LcPotential zero = LcPotential::zero(s);
    CHECK(almost_equilibria(zero, 10.0, 4, 1).measures.size() == 4);

    try {
        almost_equilibria(zero, 1e-14, 3, 1);
        FAIL("expected CannotSeparate");
    } catch (const CannotSeparate& e) {
        CHECK(e.requested() == 3);
        CHECK(e.achieved() >= 0);
    }
}
