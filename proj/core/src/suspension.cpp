#include "thermoflow/suspension.hpp"

#include "thermoflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace thermoflow {

FiberPotential::FiberPotential(Sft sft, int depth, std::vector<std::vector<double>> coeffs)
    : sft_(std::move(sft)), depth_(depth), words_(sft_.words(depth)),
      coeffs_(std::move(coeffs)) {
    if (depth_ < 1) throw ValidationError("fiber potential depth must be >= 1");
    if (coeffs_.size() != words_.size())
        throw ValidationError("fiber potential must define a polynomial for every admissible word");
    for (auto& c : coeffs_) {
        if (c.empty()) c.push_back(0.0);
        if (static_cast<int>(c.size()) > kMaxDegree + 1)
            throw ValidationError("fiber polynomial degree exceeds the cap");
        for (double x : c)
            if (!std::isfinite(x)) throw ValidationError("fiber coefficients must be finite");
    }
}

FiberPotential FiberPotential::constant(const Sft& sft, double c) {
    std::vector<std::vector<double>> coeffs(sft.alphabet_size(), std::vector<double>{c});
    return FiberPotential(sft, 1, std::move(coeffs));
}

double FiberPotential::eval(std::size_t word_index, double t) const {
    const auto& c = coeffs_[word_index];
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

FiberPotential FiberPotential::refine(int new_depth) const {
    if (new_depth < depth_) throw ValidationError("refine cannot reduce depth");
    if (new_depth == depth_) return *this;
    auto longer = sft_.words(new_depth);
    std::vector<std::vector<double>> coeffs(longer.size());
    for (std::size_t i = 0; i < longer.size(); ++i) {
        Word prefix(longer[i].begin(), longer[i].begin() + depth_);
        auto it = std::lower_bound(words_.begin(), words_.end(), prefix);
        coeffs[i] = coeffs_[static_cast<std::size_t>(it - words_.begin())];
    }
    return FiberPotential(sft_, new_depth, std::move(coeffs));
}

FiberPotential fiber_combine(const FiberPotential& g, const FiberPotential& h, double alpha,
                             double beta) {
    if (g.sft() != h.sft())
        throw MismatchedSft("cannot combine fiber potentials over different shifts");
    const int k = std::max(g.depth(), h.depth());
    FiberPotential a = g.refine(k);
    FiberPotential b = h.refine(k);
    std::vector<std::vector<double>> coeffs(a.coeffs().size());
    for (std::size_t w = 0; w < coeffs.size(); ++w) {
        const auto& ca = a.coeffs()[w];
        const auto& cb = b.coeffs()[w];
        std::vector<double> c(std::max(ca.size(), cb.size()), 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const double xa = i < ca.size() ? ca[i] : 0.0;
            const double xb = i < cb.size() ? cb[i] : 0.0;
            c[i] = alpha * xa + beta * xb;
        }
        coeffs[w] = std::move(c);
    }
    return FiberPotential(g.sft(), k, std::move(coeffs));
}

FiberPotential fiber_plus_constant(const FiberPotential& g, double c) {
    auto coeffs = g.coeffs();
    for (auto& poly : coeffs) poly[0] += c;
    return FiberPotential(g.sft(), g.depth(), std::move(coeffs));
}

FlowMeasure lift(const MarkovMeasure& mu, const Roof& roof) {
    if (mu.base() != roof.sft())
        throw MismatchedSft("measure and roof live over different shifts");
    return FlowMeasure{mu, roof, integrate(roof.potential(), mu)};
}

double abramov_entropy(const FlowMeasure& nu) { return entropy(nu.base) / nu.normalizer; }

LcPotential delta_transform(const FiberPotential& g, const Roof& roof) {
    if (g.sft() != roof.sft())
        throw MismatchedSft("fiber potential and roof live over different shifts");
    const int k = std::max(g.depth(), roof.depth());
    FiberPotential gk = g.refine(k);
    Roof rk = roof.refine(k);
    std::vector<double> vals(gk.coeffs().size());
    for (std::size_t w = 0; w < vals.size(); ++w) {
        const double r = rk.potential().values()[w];
        const auto& c = gk.coeffs()[w];
        double acc = 0.0, pw = r;
        for (std::size_t i = 0; i < c.size(); ++i) {
            acc += c[i] * pw / static_cast<double>(i + 1);
            pw *= r;
        }
        vals[w] = acc;
    }
    return LcPotential(g.sft(), k, std::move(vals));
}

double kac_integral(const FiberPotential& g, const FlowMeasure& nu) {
    if (g.sft() != nu.roof.sft())
        throw MismatchedSft("fiber potential and flow measure live over different shifts");
    return integrate(delta_transform(g, nu.roof), nu.base) / nu.normalizer;
}

BowenSolution flow_pressure(const FiberPotential& g, const Roof& roof) {
    return bowen_solve(make_bowen_problem(delta_transform(g, roof), roof));
}

BowenSolution flow_entropy(const Roof& roof) {
    return flow_pressure(FiberPotential::zero(roof.sft()), roof);
}

FlowMeasure flow_mme(const Roof& roof) {
    const double h = flow_entropy(roof).t_star;
    MarkovMeasure mu = equilibrium(scale(roof.potential(), -h));
    FlowMeasure nu = lift(mu, roof);
    if (std::fabs(abramov_entropy(nu) - h) > 1e-8)
        throw Error("flow MME failed the entropy cross-check");
    return nu;
}

std::pair<double, double> reparam_distance(const Roof& roof1, const Roof& roof2) {
    if (roof1.sft() != roof2.sft())
        throw MismatchedSft("roofs live over different shifts");
    const int k = std::max(roof1.depth(), roof2.depth());
    const Roof r1 = roof1.refine(k);
    const Roof r2 = roof2.refine(k);
    const auto& v1 = r1.potential().values();
    const auto& v2 = r2.potential().values();
    double sup = 0.0, ratio = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        sup = std::max(sup, std::fabs(v1[i] - v2[i]));
        ratio = std::max(ratio, std::fabs(v2[i] / v1[i] - 1.0));
    }
    return {sup, ratio};
}

} // namespace thermoflow
