#include "thermoflow/sampling.hpp"

#include "thermoflow/perturbation.hpp"

#include <vector>

namespace thermoflow {

Sft full_shift(int n) {
    return Sft(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 1)));
}

Sft golden_mean() { return Sft(2, {{1, 1}, {1, 0}}); }

Sft triangle3() { return Sft(3, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }

LcPotential random_lc_potential(const Sft& sft, int depth, double lo, double hi,
                                SplitMix64& rng) {
    std::vector<double> vals(sft.words(depth).size());
    for (double& v : vals) v = rng.uniform(lo, hi);
    return LcPotential(sft, depth, std::move(vals));
}

Roof random_roof(const Sft& sft, int depth, SplitMix64& rng) {
    return Roof(random_lc_potential(sft, depth, 0.5, 2.0, rng));
}

FiberPotential random_fiber(const Sft& sft, int depth, int degree, double amp,
                            SplitMix64& rng) {
    std::vector<std::vector<double>> coeffs(sft.words(depth).size());
    for (auto& c : coeffs) {
        c.resize(degree + 1);
        for (double& x : c) x = rng.uniform(-amp, amp);
    }
    return FiberPotential(sft, depth, std::move(coeffs));
}

LcPotential random_pressure_gap_potential(const Sft& sft, int depth, SplitMix64& rng) {
    return random_lc_potential(sft, depth, 0.9, 1.1, rng);
}

LcPotential random_zero_pressure_phi(const Sft& sft, int depth, SplitMix64& rng) {
    return zero_pressure_normalize(random_lc_potential(sft, depth, -0.1, 0.1, rng));
}

Word random_admissible_word(const Sft& sft, int length, SplitMix64& rng) {
    Word w;
    w.reserve(length);
    int sym = static_cast<int>(rng.next() % sft.alphabet_size());
    w.push_back(sym);
    while (static_cast<int>(w.size()) < length) {
        const auto& succ = sft.out_neighbors(w.back());
        w.push_back(succ[rng.next() % succ.size()]);
    }
    return w;
}

} // namespace thermoflow
