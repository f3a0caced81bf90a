#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thermoflow/errors.hpp"
#include "thermoflow/sampling.hpp"
#include "thermoflow/suspension.hpp"

#include <algorithm>
#include <cmath>

using namespace thermoflow;

namespace {
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

MarkovMeasure fair_bernoulli() {
    return MarkovMeasure::on_base(full_shift(2), {0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}});
}
} // namespace

TEST_CASE("lift computes the mean return time") {
    const Sft s = full_shift(2);
    const FlowMeasure unit = lift(fair_bernoulli(), Roof(LcPotential::constant(s, 1.0)));
    CHECK(unit.normalizer == doctest::Approx(1.0).epsilon(1e-15));

    const FlowMeasure scaled = lift(fair_bernoulli(), Roof(LcPotential::constant(s, 2.5)));
    CHECK(scaled.normalizer == doctest::Approx(2.5).epsilon(1e-15));

    // Parry measure with the (1,2) roof: normalizer = pi1 + 2 pi2.
    const MarkovMeasure parry = equilibrium(LcPotential::zero(golden_mean()));
    const FlowMeasure nu =
        lift(parry, Roof(LcPotential(golden_mean(), 1, {1.0, 2.0})));
    CHECK(nu.normalizer ==
          doctest::Approx(parry.pi()[0] + 2.0 * parry.pi()[1]).epsilon(1e-13));

    CHECK_THROWS_AS(lift(fair_bernoulli(), Roof(LcPotential::constant(golden_mean(), 1.0))),
                    MismatchedSft);
}

TEST_CASE("abramov entropy divides by the return time") {
    const Sft s = full_shift(2);
    for (double c : {0.5, 1.0, 2.0}) {
        const FlowMeasure nu = lift(fair_bernoulli(), Roof(LcPotential::constant(s, c)));
        CHECK(abramov_entropy(nu) == doctest::Approx(std::log(2.0) / c).epsilon(1e-14));
    }
    const MarkovMeasure parry = equilibrium(LcPotential::zero(golden_mean()));
    const Roof roof(LcPotential(golden_mean(), 1, {1.0, 2.0}));
    const FlowMeasure nu = lift(parry, roof);
    CHECK(abramov_entropy(nu) ==
          doctest::Approx(entropy(parry) / (parry.pi()[0] + 2.0 * parry.pi()[1]))
              .epsilon(1e-13));
}

TEST_CASE("delta transform integrates polynomials exactly") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential(s, 1, {2.0, 0.75}));

    // g = 1: delta equals the roof bit for bit.
    const LcPotential d1 = delta_transform(FiberPotential::constant(s, 1.0), roof);
    CHECK(d1.values() == roof.potential().values());

    // g(t) = t with roof 2: integral is 2.
    const FiberPotential lin(s, 1, {{0.0, 1.0}, {0.0, 1.0}});
    const LcPotential dl = delta_transform(lin, Roof(LcPotential::constant(s, 2.0)));
    CHECK(dl.values()[0] == 2.0);

    // g(t) = 3t^2 with roof c: integral is c^3.
    const FiberPotential quad(s, 1, {{0.0, 0.0, 3.0}, {0.0, 0.0, 3.0}});
    const LcPotential dq = delta_transform(quad, Roof(LcPotential::constant(s, 1.5)));
    CHECK(dq.values()[0] == doctest::Approx(1.5 * 1.5 * 1.5).epsilon(1e-15));
}

TEST_CASE("delta transform is linear") {
    SplitMix64 rng(61);
    const Sft s = triangle3();
    const Roof roof = random_roof(s, 2, rng);
    const FiberPotential g = random_fiber(s, 1, 4, 1.0, rng);
    const FiberPotential h = random_fiber(s, 2, 3, 1.0, rng);
    const LcPotential lhs = delta_transform(fiber_combine(g, h, 1.5, -0.5), roof);
    const LcPotential rhs =
        combine(delta_transform(g, roof), delta_transform(h, roof), 1.5, -0.5);
    CHECK(sup_dist(lhs, rhs) <= 1e-13);
}

TEST_CASE("kac integrals") {
    const Sft s = full_shift(2);
    const Roof roof(LcPotential::constant(s, 1.7));
    const FlowMeasure nu = lift(fair_bernoulli(), roof);

    CHECK(kac_integral(FiberPotential::constant(s, 4.25), nu) ==
          doctest::Approx(4.25).epsilon(1e-13));
    CHECK(kac_integral(FiberPotential::constant(s, 1.0), nu) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // g(t) = t over a constant roof c integrates to c/2.
    const FiberPotential lin(s, 1, {{0.0, 1.0}, {0.0, 1.0}});
    CHECK(kac_integral(lin, nu) == doctest::Approx(1.7 / 2.0).epsilon(1e-13));
}

TEST_CASE("flow entropy closed forms") {
    for (int n : {2, 3, 5}) {
        const Sft s = full_shift(n);
        for (double c : {0.5, 1.0, 2.0}) {
            const BowenSolution sol = flow_entropy(Roof(LcPotential::constant(s, c)));
            CHECK(std::fabs(sol.t_star - std::log(n) / c) <= 1e-9);
        }
    }
    const Sft f = full_shift(2);
    CHECK(std::fabs(flow_entropy(Roof(LcPotential(f, 1, {1.0, 2.0}))).t_star -
                    std::log(kGolden)) <= 1e-9);
    const Sft g = golden_mean();
    CHECK(std::fabs(flow_entropy(Roof(LcPotential::constant(g, 1.0))).t_star -
                    std::log(kGolden)) <= 1e-9);
}

TEST_CASE("flow pressure of the zero observable is the flow entropy") {
    const Sft g = golden_mean();
    SplitMix64 rng(67);
    const Roof roof = random_roof(g, 2, rng);
    const BowenSolution a = flow_pressure(FiberPotential::zero(g), roof);
    const BowenSolution b = flow_entropy(roof);
    CHECK(a.t_star == b.t_star);
}

TEST_CASE("constants shift the flow pressure") {
    SplitMix64 rng(71);
    const Sft s = full_shift(2);
    const Roof roof = random_roof(s, 1, rng);
    const FiberPotential g = random_fiber(s, 1, 2, 0.5, rng);
    const double base = flow_pressure(g, roof).t_star;
    for (double c : {-0.4, 0.9}) {
        CHECK(std::fabs(flow_pressure(fiber_plus_constant(g, c), roof).t_star - base - c) <=
              1e-10);
    }
    CHECK(std::fabs(flow_pressure(FiberPotential::zero(s),
                                  Roof(LcPotential::constant(s, 1.0)))
                        .t_star -
                    std::log(2.0)) <= 1e-10);
}

TEST_CASE("the flow MME lifts the right equilibrium") {
    // Constant roof on the full shift: the base of the MME is fair Bernoulli.
    const Sft s = full_shift(2);
    const FlowMeasure nu = flow_mme(Roof(LcPotential::constant(s, 1.3)));
    for (double x : nu.base.pi()) CHECK(x == doctest::Approx(0.5).epsilon(1e-10));

    // Unit roof on the golden mean: the base is the Parry measure.
    const FlowMeasure gm = flow_mme(Roof(LcPotential::constant(golden_mean(), 1.0)));
    const MarkovMeasure parry = equilibrium(LcPotential::zero(golden_mean()));
    CHECK(gm.base.trans_sup_dist(parry) <= 1e-10);

    // Depth-1 roof (1,2): the base is the equilibrium of (-t*, -2 t*).
    const Roof roof12(LcPotential(s, 1, {1.0, 2.0}));
    const double t_star = flow_entropy(roof12).t_star;
    const FlowMeasure nu12 = flow_mme(roof12);
    const MarkovMeasure expect =
        equilibrium(LcPotential(s, 1, {-t_star * 1.0, -t_star * 2.0}));
    CHECK(nu12.base.trans_sup_dist(expect) <= 1e-12);
    CHECK(std::fabs(abramov_entropy(nu12) - t_star) <= 1e-8);
}

TEST_CASE("reparametrization distances") {
    const Sft s = full_shift(2);
    const Roof r1(LcPotential(s, 1, {1.0, 2.0}));
    auto [sup0, ratio0] = reparam_distance(r1, r1);
    CHECK(sup0 == 0.0);
    CHECK(ratio0 == 0.0);

    const Roof a(LcPotential::constant(s, 1.0));
    const Roof b(LcPotential::constant(s, 1.1));
    auto [sup1, ratio1] = reparam_distance(a, b);
    CHECK(sup1 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(ratio1 == doctest::Approx(0.1).epsilon(1e-15));

    const Roof c(LcPotential(s, 1, {1.1, 2.1}));
    auto [sup2, ratio2] = reparam_distance(r1, c);
    CHECK(sup2 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(ratio2 == doctest::Approx(0.1).epsilon(1e-12)); // max(0.1, 0.05)
}

TEST_CASE("kac integral matches a simulated trajectory average") {
    // Independent route: run the base chain, accumulate the fiber integral of
    // g by Simpson quadrature (exact for the cubic fibers used here) and the
    // elapsed time; the Birkhoff quotient converges to the Kac integral.
    SplitMix64 rng(101);
    const Sft s = golden_mean();
    const Roof roof = random_roof(s, 2, rng);
    const FiberPotential g = random_fiber(s, 2, 3, 1.0, rng);
    const MarkovMeasure mu = random_markov(s, rng);
    const FlowMeasure nu = lift(mu, roof);
    const double expected = kac_integral(g, nu);

    auto pick = [&](const std::vector<double>& weights) {
        double u = rng.uniform01();
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            if (u < weights[i]) return static_cast<int>(i);
            u -= weights[i];
        }
        return static_cast<int>(weights.size() - 1);
    };

    const int steps = 400000;
    std::vector<int> path(steps + 2);
    path[0] = pick(mu.pi());
    for (int i = 1; i < steps + 2; ++i) path[i] = pick(mu.trans()[path[i - 1]]);

    const auto& words = g.words();
    double time_total = 0.0, integral_total = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Word w{path[i], path[i + 1]};
        const auto it = std::lower_bound(words.begin(), words.end(), w);
        const std::size_t idx = static_cast<std::size_t>(it - words.begin());
        const double r = roof.potential().values()[idx];
        time_total += r;
        integral_total +=
            r / 6.0 * (g.eval(idx, 0.0) + 4.0 * g.eval(idx, r / 2.0) + g.eval(idx, r));
    }
    CHECK(integral_total / time_total == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("fiber potentials validate their degree and support") {
    const Sft s = full_shift(2);
    CHECK_THROWS_AS(FiberPotential(s, 1, {{0.0}}), ValidationError);
    std::vector<std::vector<double>> deep(2, std::vector<double>(10, 1.0));
    CHECK_THROWS_AS(FiberPotential(s, 1, deep), ValidationError);
    const FiberPotential g(s, 1, {{1.0, 2.0}, {0.5}});
    CHECK(g.eval(0, 2.0) == 5.0);
    CHECK(g.eval(1, 100.0) == 0.5);
    // Refinement copies polynomials onto longer words.
    const FiberPotential g2 = g.refine(2);
    CHECK(g2.eval(0, 1.0) == 3.0); // word 11 inherits from 1
    CHECK(g2.eval(3, 1.0) == 0.5); // word 22 inherits from 2
}
