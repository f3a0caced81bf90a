#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "thermoflow/errors.hpp"
#include "thermoflow/pressure.hpp"
#include "thermoflow/sampling.hpp"

#include <cmath>

using namespace thermoflow;

namespace {
const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;
}

TEST_CASE("two-block recoding shapes") {
    const Sft g = golden_mean();

    // Depth <= 2 passes through on the base alphabet.
    const Recoding id = recode_two_block(LcPotential::constant(g, 1.0));
    CHECK(id.chain == g);
    CHECK(id.block_len == 1);
    CHECK(id.edge_potential.depth() == 2);

    // Depth 3 on the golden mean: symbols {11,12,21}, edges by overlap.
    const LcPotential p3(g, 3, std::vector<double>(g.words(3).size(), 0.0));
    const Recoding rc = recode_two_block(p3);
    CHECK(rc.chain.alphabet_size() == 3);
    CHECK(rc.block_len == 2);
    CHECK(rc.blocks[0] == Word{0, 0});
    CHECK(rc.blocks[1] == Word{0, 1});
    CHECK(rc.blocks[2] == Word{1, 0});
    CHECK(rc.chain.edge(0, 0)); // 11 -> 11
    CHECK(rc.chain.edge(0, 1)); // 11 -> 12
    CHECK(rc.chain.edge(1, 2)); // 12 -> 21
    CHECK(!rc.chain.edge(1, 0));

    // Depth 3 on the full 2-shift: 4 block symbols, 8 edges.
    const Sft f = full_shift(2);
    const Recoding rf = recode_two_block(LcPotential(f, 3, std::vector<double>(8, 0.0)));
    CHECK(rf.chain.alphabet_size() == 4);
    CHECK(rf.chain.words(2).size() == 8);
}

TEST_CASE("pressure of constant potentials") {
    for (int n : {2, 3, 5}) {
        const Sft s = full_shift(n);
        CHECK(pressure(LcPotential::zero(s)).value == doctest::Approx(std::log(n)).epsilon(1e-13));
        CHECK(pressure(LcPotential::constant(s, 0.8)).value ==
              doctest::Approx(std::log(n) + 0.8).epsilon(1e-13));
    }
}

TEST_CASE("row-constant weights sum inside the eigenvalue") {
    // phi(1) = log 2, phi(2) = 0 on the full 2-shift: lambda = 2 + 1 = 3.
    const Sft s = full_shift(2);
    const PressureResult pr = pressure(LcPotential(s, 1, {std::log(2.0), 0.0}));
    CHECK(std::fabs(pr.value - std::log(3.0)) <= 1e-12);
    CHECK(pr.lambda == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("topological entropy closed forms") {
    CHECK(std::fabs(topological_entropy(full_shift(2)) - std::log(2.0)) <= 1e-13);
    CHECK(std::fabs(topological_entropy(full_shift(3)) - std::log(3.0)) <= 1e-13);
    CHECK(std::fabs(topological_entropy(golden_mean()) - std::log(kGolden)) <= 1e-13);
    CHECK(std::fabs(topological_entropy(triangle3()) - std::log(2.0)) <= 1e-13);
}

TEST_CASE("pressure result invariants") {
    SplitMix64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const Sft s = t % 2 == 0 ? golden_mean() : triangle3();
        const LcPotential p = random_lc_potential(s, 1 + t % 3, -1.0, 1.0, rng);
        const PressureResult pr = pressure(p);
        CHECK(pr.value == doctest::Approx(std::log(pr.lambda)).epsilon(1e-14));
        CHECK(pr.lambda > 0.0);
        CHECK(pr.recoded_depth == std::max(p.depth(), 2));
        double dot = 0.0;
        for (std::size_t i = 0; i < pr.left.size(); ++i) {
            CHECK(pr.left[i] > 0.0);
            CHECK(pr.right[i] > 0.0);
            dot += pr.left[i] * pr.right[i];
        }
        CHECK(dot == doctest::Approx(1.0).epsilon(1e-12));

        // Residual certificate on the unshifted weighted matrix.
        const auto& edges = pr.recoding.edge_potential.words();
        const auto& vals = pr.recoding.edge_potential.values();
        const int sc = pr.recoding.chain.alphabet_size();
        std::vector<double> mr(sc, 0.0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            mr[edges[e][0]] += std::exp(vals[e]) * pr.right[edges[e][1]];
        double resid = 0.0;
        for (int i = 0; i < sc; ++i)
            resid = std::max(resid, std::fabs(mr[i] - pr.lambda * pr.right[i]));
        CHECK(resid <= 1e-12 * pr.lambda);
    }
}

TEST_CASE("equilibrium of the zero potential on the full shift is fair Bernoulli") {
    const MarkovMeasure mu = equilibrium(LcPotential::zero(full_shift(2)));
    for (double x : mu.pi()) CHECK(x == doctest::Approx(0.5).epsilon(1e-13));
    for (const auto& row : mu.trans())
        for (double t : row) CHECK(t == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("equilibrium of the golden mean is the Parry measure") {
    const MarkovMeasure mu = equilibrium(LcPotential::zero(golden_mean()));
    CHECK(mu.trans()[0][0] == doctest::Approx(1.0 / kGolden).epsilon(1e-12));
    CHECK(mu.trans()[0][1] == doctest::Approx(1.0 / (kGolden * kGolden)).epsilon(1e-12));
    CHECK(mu.trans()[1][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mu.pi()[0] ==
          doctest::Approx(kGolden * kGolden / (1.0 + kGolden * kGolden)).epsilon(1e-12));
}

TEST_CASE("depth-1 log weights give Bernoulli equilibria") {
    const double p = 0.3;
    const Sft s = full_shift(2);
    const LcPotential phi(s, 1, {std::log(p), std::log(1.0 - p)});
    const PressureResult pr = pressure(phi);
    CHECK(std::fabs(pr.value) <= 1e-12); // h(mu) + int phi = 0 at the optimum
    const MarkovMeasure mu = equilibrium_from(pr);
    for (int i = 0; i < 2; ++i) {
        CHECK(mu.trans()[i][0] == doctest::Approx(p).epsilon(1e-12));
        CHECK(mu.trans()[i][1] == doctest::Approx(1.0 - p).epsilon(1e-12));
    }
}

TEST_CASE("markov entropy closed forms") {
    const Sft s = full_shift(2);
    const MarkovMeasure fair = MarkovMeasure::on_base(s, {0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}});
    CHECK(entropy(fair) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    const MarkovMeasure cycle = MarkovMeasure::on_base(s, {0.5, 0.5}, {{0.0, 1.0}, {1.0, 0.0}});
    CHECK(entropy(cycle) == 0.0);

    const double p = 0.3;
    const MarkovMeasure bern =
        MarkovMeasure::on_base(s, {p, 1.0 - p}, {{p, 1.0 - p}, {p, 1.0 - p}});
    CHECK(entropy(bern) ==
          doctest::Approx(-p * std::log(p) - (1.0 - p) * std::log(1.0 - p)).epsilon(1e-15));
}

TEST_CASE("measure validation rejects bad data") {
    const Sft s = full_shift(2);
    CHECK_THROWS_AS(MarkovMeasure::on_base(s, {0.7, 0.7}, {{0.5, 0.5}, {0.5, 0.5}}),
                    ValidationError);
    CHECK_THROWS_AS(MarkovMeasure::on_base(s, {0.5, 0.5}, {{0.9, 0.2}, {0.5, 0.5}}),
                    ValidationError);
    // Mass on a forbidden edge of the golden mean shift.
    CHECK_THROWS_AS(MarkovMeasure::on_base(golden_mean(), {0.5, 0.5},
                                           {{0.5, 0.5}, {0.5, 0.5}}),
                    ValidationError);
    // Stationarity violation.
    CHECK_THROWS_AS(MarkovMeasure::on_base(s, {0.9, 0.1}, {{0.5, 0.5}, {0.5, 0.5}}),
                    ValidationError);
}

TEST_CASE("integration against markov measures") {
    const Sft s = full_shift(2);
    const MarkovMeasure fair = MarkovMeasure::on_base(s, {0.5, 0.5}, {{0.5, 0.5}, {0.5, 0.5}});
    CHECK(integrate(LcPotential::constant(s, 3.25), fair) ==
          doctest::Approx(3.25).epsilon(1e-15));

    const double q = 0.2;
    const MarkovMeasure bern =
        MarkovMeasure::on_base(s, {q, 1.0 - q}, {{q, 1.0 - q}, {q, 1.0 - q}});
    const LcPotential d1(s, 1, {5.0, -1.0});
    CHECK(integrate(d1, bern) == doctest::Approx(q * 5.0 + (1.0 - q) * -1.0).epsilon(1e-14));

    // Indicator of the word 12 under fair Bernoulli: 1/4.
    const LcPotential ind(s, 2, {0.0, 1.0, 0.0, 0.0});
    CHECK(integrate(ind, fair) == doctest::Approx(0.25).epsilon(1e-14));

    // Depth-3 indicator of 121 under fair Bernoulli: 1/8 (block extension).
    std::vector<double> v8(8, 0.0);
    v8[2] = 1.0; // words lex: 111,112,121,122,... -> index 2 is 121
    CHECK(integrate(LcPotential(s, 3, v8), fair) == doctest::Approx(0.125).epsilon(1e-14));

    CHECK_THROWS_AS(integrate(LcPotential::zero(golden_mean()), fair), MismatchedSft);
}

TEST_CASE("block extension preserves entropy and integrals") {
    SplitMix64 rng(31);
    for (int t = 0; t < 10; ++t) {
        const Sft s = t % 2 == 0 ? golden_mean() : full_shift(2);
        const MarkovMeasure mu = random_markov(s, rng);
        const MarkovMeasure ext = extend_markov(mu, 3);
        CHECK(entropy(ext) == doctest::Approx(entropy(mu)).epsilon(1e-12));
        const LcPotential p = random_lc_potential(s, 2, -1.0, 1.0, rng);
        CHECK(integrate(p, ext) == doctest::Approx(integrate(p, mu)).epsilon(1e-12));
        // The symbol marginal is preserved as well.
        const auto m1 = mu.symbol_marginal();
        const auto m2 = ext.symbol_marginal();
        for (std::size_t i = 0; i < m1.size(); ++i)
            CHECK(m1[i] == doctest::Approx(m2[i]).epsilon(1e-12));
    }
}

TEST_CASE("equilibrium identity at depth 3 goes through the recoded chain") {
    SplitMix64 rng(37);
    const Sft g = golden_mean();
    const LcPotential p = random_lc_potential(g, 3, -1.0, 1.0, rng);
    const PressureResult pr = pressure(p);
    const MarkovMeasure mu = equilibrium_from(pr);
    CHECK(mu.block_len() == 2);
    CHECK(std::fabs(entropy(mu) + integrate(p, mu) - pr.value) <= 1e-10);
    // Marginal sums to one.
    double total = 0.0;
    for (double x : mu.symbol_marginal()) total += x;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orbit oracle is exact on full shifts and matches the golden trace") {
    const Sft f = full_shift(2);
    const auto full = pressure_oracle_orbits(LcPotential::zero(f), 8);
    for (const auto& [p, v] : full) CHECK(std::fabs(v - std::log(2.0)) <= 1e-14);

    const Sft g = golden_mean();
    const auto orb = pressure_oracle_orbits(LcPotential::zero(g), 10);
    REQUIRE(orb.size() == 10);
    CHECK(orb[9].second == doctest::Approx(std::log(123.0) / 10.0).epsilon(1e-15));

    // Constant potentials shift every entry by c.
    const auto shifted = pressure_oracle_orbits(LcPotential::constant(g, 0.75), 10);
    for (int i = 0; i < 10; ++i)
        CHECK(shifted[i].second == doctest::Approx(orb[i].second + 0.75).epsilon(1e-13));
}

TEST_CASE("variational oracle is deterministic and dominated") {
    const Sft s = full_shift(2);
    const LcPotential zero = LcPotential::zero(s);
    const double a = pressure_oracle_variational(zero, 500, 7);
    const double b = pressure_oracle_variational(zero, 500, 7);
    CHECK(a == b);
    CHECK(a <= pressure(zero).value + 1e-10);
    CHECK(a >= std::log(2.0) - 0.2); // 500 trials get close on a 2x2 chain

    SplitMix64 rng(41);
    const LcPotential p = random_lc_potential(golden_mean(), 2, -1.0, 1.0, rng);
    CHECK(pressure_oracle_variational(p, 200, 3) <= pressure(p).value + 1e-10);
}

TEST_CASE("the orbit oracle refuses oversized enumerations") {
    // 2^p periodic points per period add up past the 1e7 guard by p = 30.
    CHECK_THROWS_AS(pressure_oracle_orbits(LcPotential::zero(full_shift(2)), 30), TooLarge);
    CHECK_THROWS_AS(full_shift(3).words(20), TooLarge);
}

TEST_CASE("pressure is monotone and shifts under constants") {
    SplitMix64 rng(43);
    const Sft s = triangle3();
    for (int t = 0; t < 5; ++t) {
        const LcPotential p = random_lc_potential(s, 2, -1.0, 1.0, rng);
        const LcPotential bump = random_lc_potential(s, 2, 0.0, 0.7, rng);
        CHECK(pressure(p).value <= pressure(combine(p, bump, 1.0, 1.0)).value + 1e-12);
        const double c = rng.uniform(-1.5, 1.5);
        CHECK(pressure(combine(p, LcPotential::constant(s, c), 1.0, 1.0)).value ==
              doctest::Approx(pressure(p).value + c).epsilon(1e-12));
    }
}
