#include "thermoflow/perturbation.hpp"

#include "thermoflow/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <utility>

namespace thermoflow {

namespace {

using rational = boost::multiprecision::cpp_rational;

constexpr double kZeroPressureTol = 1e-10;
constexpr int kGridSamples = 1000; // fiber evaluations per word use 1001 points

// Exact integral over [0, r] of the polynomial with the given double
// coefficients, as a rational number. Doubles convert exactly, so this is
// the true integral of the stored polynomial.
rational exact_poly_integral(const std::vector<double>& coeffs, double r) {
    const rational rr(r);
    rational acc = 0, pw = rr;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += rational(coeffs[i]) * pw / static_cast<int>(i + 1);
        pw *= rr;
    }
    return acc;
}

void require_zero_pressure(const LcPotential& phi) {
    const double res = std::fabs(pressure(scale(phi, -1.0)).value);
    if (!(res <= kZeroPressureTol))
        throw NotZeroPressure("P(-phi) must vanish to 1e-10; got residual " +
                              std::to_string(res));
}

} // namespace

PressureGapCertificate pressure_gap(const LcPotential& p) {
    const double pr = pressure(p).value;
    const double sup = p.max_value();
    const double min = p.min_value();
    return PressureGapCertificate{sup < pr - 1e-12 && min > 0.0, sup, pr, min};
}

Roof zero_pressure_roof(const LcPotential& p) {
    const PressureGapCertificate cert = pressure_gap(p);
    if (!cert.in_class)
        throw NotInL("potential is not positive with sup below its pressure");
    Roof roof{zero_pressure_normalize(p)};

    const double res = std::fabs(pressure(scale(roof.potential(), -1.0)).value);
    if (!(res <= kZeroPressureTol))
        throw Error("zero-pressure roof failed its pressure check");
    const double h = flow_entropy(roof).t_star;
    if (std::fabs(h - 1.0) > 1e-8)
        throw Error("zero-pressure roof failed the unit-entropy check");
    return roof;
}

LcPotential zero_pressure_normalize(const LcPotential& f) {
    // Work with g = f - max f: P(f) - f = P(g) - g in exact arithmetic, and
    // the canonicalized form makes the result invariant under constant shifts
    // of f whenever the shift itself incurs no rounding.
    const double m = f.max_value();
    std::vector<double> g(f.values().size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = f.values()[i] - m;
    const LcPotential centered(f.sft(), f.depth(), std::move(g));
    const double pr = pressure(centered).value;
    std::vector<double> vals(centered.values().size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = pr - centered.values()[i];
    return LcPotential(f.sft(), f.depth(), std::move(vals));
}

PerturbationReport perturb_roof(const Roof& roof, const LcPotential& phi) {
    if (roof.sft() != phi.sft())
        throw MismatchedSft("roof and phi live over different shifts");
    if (!(phi.min_value() > 0.0))
        throw NotPositive("phi must be strictly positive");
    require_zero_pressure(phi);

    const int k = std::max(roof.depth(), phi.depth());
    const Roof tau = roof.refine(k);
    const LcPotential phi_k = phi.refine(k);

    const double h = flow_entropy(roof).t_star;

    // Unsimplified update tau' = tau + (phi - h tau)/h; algebraically phi/h.
    const auto& tv = tau.potential().values();
    const auto& pv = phi_k.values();
    std::vector<double> out(tv.size());
    double simplification_gap = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = tv[i] + (pv[i] - h * tv[i]) / h;
        simplification_gap = std::max(simplification_gap, std::fabs(out[i] - pv[i] / h));
    }
    Roof perturbed{LcPotential(roof.sft(), k, std::move(out))}; // NotPositive if violated

    const double h_after = flow_entropy(perturbed).t_star;

    // Distance recorded through the exact rearrangement
    // ||tau' - tau||_0 = ||phi - h tau||_0 / h.
    const double numerator = sup_norm(combine(phi_k, tau.potential(), 1.0, -h));
    const double distance = numerator / h;

    PerturbationReport rep;
    rep.roof_out = perturbed;
    rep.preserved_name = "flow_entropy";
    rep.preserved_before = h;
    rep.preserved_after = h_after;
    rep.distance = distance;
    rep.residuals["flow_entropy_preserved"] = {std::fabs(h_after - h), 1e-8};
    rep.residuals["zero_pressure_phi"] = {std::fabs(pressure(scale(phi, -1.0)).value),
                                          kZeroPressureTol};
    rep.residuals["unsimplified_matches_phi_over_h"] = {
        simplification_gap, 1e-12 * std::max(1.0, sup_norm(phi_k) / h)};
    return rep;
}

PerturbationReport perturb_fiber(const FiberPotential& g, const Roof& roof,
                                 const LcPotential& phi, double epsilon) {
    if (g.sft() != roof.sft() || phi.sft() != roof.sft())
        throw MismatchedSft("fiber, roof and phi must live over one shift");
    require_zero_pressure(phi);

    const int k = std::max({g.depth(), roof.depth(), phi.depth()});
    const FiberPotential gk = g.refine(k);
    const Roof rk = roof.refine(k);
    const LcPotential phi_k = phi.refine(k);
    const std::size_t nwords = gk.coeffs().size();
    const auto& rv = rk.potential().values();

    auto grid_min = [&](const FiberPotential& f) {
        double m = f.eval(0, 0.0);
        for (std::size_t w = 0; w < nwords; ++w)
            for (int s = 0; s <= kGridSamples; ++s)
                m = std::min(m, f.eval(w, rv[w] * s / kGridSamples));
        return m;
    };

    // Shift so the integrand is >= 1 on the sampled fibers; this bounds
    // inf delta_{g0} >= min roof away from zero before the division below.
    const double c_shift = std::max(0.0, 1.0 - grid_min(gk));
    const FiberPotential g0 = fiber_plus_constant(gk, c_shift);
    const LcPotential delta0 = delta_transform(g0, rk);
    if (!(delta0.min_value() > 0.0))
        throw DegenerateDelta("shifted observable has a non-positive fiber integral");

    const BowenSolution before = bowen_solve(make_bowen_problem(delta0, rk));
    const double p0 = before.t_star;

    const LcPotential f_pot = combine(rk.potential(), phi_k, p0, -1.0);

    // Certify delta_{g_new} = F in exact arithmetic: the scaled polynomial
    // (F_w / delta_exact(w)) * g0_w integrates back to F_w as a rational
    // identity, word by word and with no tolerance.
    bool exact_identity = true;
    for (std::size_t w = 0; w < nwords; ++w) {
        const rational delta_exact = exact_poly_integral(g0.coeffs()[w], rv[w]);
        if (delta_exact <= 0) throw DegenerateDelta("exact fiber integral is not positive");
        const rational s = rational(f_pot.values()[w]) / delta_exact;
        const rational rr(rv[w]);
        rational acc = 0, pw = rr;
        const auto& c = g0.coeffs()[w];
        for (std::size_t i = 0; i < c.size(); ++i) {
            acc += (s * rational(c[i])) * pw / static_cast<int>(i + 1);
            pw *= rr;
        }
        if (acc != rational(f_pot.values()[w])) exact_identity = false;
    }

    // Emitted double-precision observable: (F/delta) g0 - C per word.
    std::vector<std::vector<double>> coeffs(nwords);
    for (std::size_t w = 0; w < nwords; ++w) {
        const double s = f_pot.values()[w] / delta0.values()[w];
        auto c = g0.coeffs()[w];
        for (double& x : c) x *= s;
        c[0] -= c_shift;
        coeffs[w] = std::move(c);
    }
    FiberPotential out(g.sft(), k, std::move(coeffs));

    const FiberPotential g_new = fiber_plus_constant(out, c_shift); // = (F/delta) g0
    const LcPotential delta_new = delta_transform(g_new, rk);
    double delta_recompute = 0.0;
    for (std::size_t w = 0; w < nwords; ++w)
        delta_recompute =
            std::max(delta_recompute, std::fabs(delta_new.values()[w] - f_pot.values()[w]));

    const BowenSolution after = bowen_solve(make_bowen_problem(delta_new, rk));

    // Sup distance on the sampled fibers; |out - g| == |g_new - g0| wordwise.
    double distance = 0.0, sup_g0 = 0.0;
    for (std::size_t w = 0; w < nwords; ++w) {
        for (int s = 0; s <= kGridSamples; ++s) {
            const double t = rv[w] * s / kGridSamples;
            distance = std::max(distance, std::fabs(out.eval(w, t) - gk.eval(w, t)));
            sup_g0 = std::max(sup_g0, g0.eval(w, t));
        }
    }
    const double delta_gap = sup_dist(delta_new, delta0);
    const double sup_bound = sup_g0 * delta_gap / delta0.min_value();

    PerturbationReport rep;
    rep.fiber_out = out;
    rep.preserved_name = "flow_pressure";
    rep.preserved_before = p0;
    rep.preserved_after = after.t_star;
    rep.distance = distance;
    rep.shift_constant = c_shift;
    rep.residuals["delta_identity_exact"] = {exact_identity ? 0.0 : 1.0, 0.0};
    rep.residuals["delta_identity_double"] = {delta_recompute,
                                              1e-10 * std::max(1.0, sup_norm(f_pot))};
    rep.residuals["flow_pressure_preserved"] = {std::fabs(after.t_star - p0), 1e-8};
    rep.residuals["sup_distance_within_bound"] = {std::max(0.0, distance - sup_bound),
                                                  1e-12 * std::max(1.0, sup_bound)};
    // When phi approximates P0*roof - delta0 below the proof threshold, the
    // emitted observable is epsilon-close to the input.
    if (delta_gap < epsilon * delta0.min_value() / std::max(sup_g0, 1e-300)) {
        rep.residuals["epsilon_target"] = {std::max(0.0, distance - epsilon),
                                           1e-12 * std::max(1.0, epsilon)};
    }
    return rep;
}

AlmostEquilibriaResult almost_equilibria(const LcPotential& p, double epsilon, int count,
                                         std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
    if (count < 1) throw ValidationError("count must be >= 1");

    const double pr = pressure(p).value;
    const double margin_floor = 1e-12;
    const double min_separation = 1e-6;

    AlmostEquilibriaResult out;
    auto admit = [&](const MarkovMeasure& mu) -> bool {
        const double value = entropy(mu) + integrate(p, mu);
        const double margin = value - (pr - epsilon);
        if (!(margin > margin_floor)) return false;
        if (!mu.full_support()) return false;
        for (const auto& other : out.measures)
            if (mu.trans_sup_dist(other) < min_separation) return false;
        out.measures.push_back(mu);
        out.margins.push_back(margin);
        return true;
    };

    // The equilibrium itself attains the supremum, so it is the first witness.
    admit(equilibrium(p));

    constexpr int kAttemptsPerSlot = 64;
    constexpr int kMaxHalvings = 60;
    while (static_cast<int>(out.measures.size()) < count) {
        const int slot = static_cast<int>(out.measures.size());
        bool filled = false;
        for (int attempt = 0; attempt < kAttemptsPerSlot && !filled; ++attempt) {
            SplitMix64 rng(substream_seed(
                seed, static_cast<std::uint64_t>(slot) * kAttemptsPerSlot + attempt));
            auto pairs = p.sft().words(2);
            std::vector<double> qv(pairs.size());
            for (double& x : qv) x = rng.uniform(-1.0, 1.0);
            const LcPotential q(p.sft(), 2, std::move(qv));

            double delta = epsilon / 4.0;
            for (int halving = 0; halving < kMaxHalvings; ++halving, delta *= 0.5) {
                const MarkovMeasure cand = equilibrium(combine(p, q, 1.0, delta));
                const double value = entropy(cand) + integrate(p, cand);
                if (value - (pr - epsilon) > margin_floor) {
                    // Margin holds at this delta; a smaller delta would only
                    // pull the candidate back toward measures already taken.
                    filled = admit(cand);
                    break;
                }
            }
        }
        if (!filled)
            throw CannotSeparate("could only separate " +
                                     std::to_string(out.measures.size()) + " of " +
                                     std::to_string(count) + " measures",
                                 count, static_cast<int>(out.measures.size()));
    }
    return out;
}

} // namespace thermoflow
