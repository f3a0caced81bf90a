#pragma once

#include "thermoflow/potential.hpp"
#include "thermoflow/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace thermoflow {

// Higher-block presentation of a depth-k potential: one chain symbol per
// admissible (k-1)-word, edges where blocks overlap, and the potential moved
// onto edges (a depth-2 potential on the chain). Depth <= 2 passes through
// with the base alphabet. Pressure is invariant under this recoding.
struct Recoding {
    Sft chain;
    Sft base;
    int block_len; // chain symbols are block_len-words of the base
    std::vector<Word> blocks;
    LcPotential edge_potential; // depth 2 on `chain`
};

Recoding recode_two_block(const LcPotential& p);

// Shift-invariant Markov measure. `chain` may be a higher-block presentation
// of `base`; `blocks` maps chain symbols to base words. For plain 1-step
// measures chain == base and blocks are the single symbols.
class MarkovMeasure {
public:
    MarkovMeasure(Sft chain, Sft base, int block_len, std::vector<Word> blocks,
                  std::vector<double> pi, std::vector<std::vector<double>> trans);

    static MarkovMeasure on_base(const Sft& base, std::vector<double> pi,
                                 std::vector<std::vector<double>> trans);

    const Sft& chain() const noexcept { return chain_; }
    const Sft& base() const noexcept { return base_; }
    int block_len() const noexcept { return block_len_; }
    const std::vector<Word>& blocks() const noexcept { return blocks_; }
    const std::vector<double>& pi() const noexcept { return pi_; }
    const std::vector<std::vector<double>>& trans() const noexcept { return trans_; }

    // Distribution of the first base symbol: the projector from block
    // statistics back to symbol statistics.
    std::vector<double> symbol_marginal() const;

    // Largest absolute difference between the transition matrices (the two
    // measures must live on the same chain).
    double trans_sup_dist(const MarkovMeasure& o) const;

    // True when every allowed transition has positive probability; together
    // with primitivity of the chain this certifies ergodicity (mixing).
    bool full_support() const;

private:
    Sft chain_;
    Sft base_;
    int block_len_;
    std::vector<Word> blocks_;
    std::vector<double> pi_;
    std::vector<std::vector<double>> trans_;
};

// Same measure presented on longer blocks; entropy and all integrals are
// unchanged.
MarkovMeasure extend_markov(const MarkovMeasure& mu, int target_block_len);

struct PressureResult {
    double value;  // topological pressure, natural log units
    double lambda; // Perron eigenvalue of the weighted transition matrix
    std::vector<double> left;  // positive left eigenvector, <left,right> = 1
    std::vector<double> right; // positive right eigenvector
    int recoded_depth;         // depth the computation ran at (= max(depth, 2))
    long iterations;
    Recoding recoding;
};

// log of the Perron eigenvalue of M[i][j] = a[i][j] * exp(p(i,j)) on the
// recoded chain, computed by power iteration with a certified residual.
PressureResult pressure(const LcPotential& p);

// h(sigma) = pressure of the zero potential; positive under the standing
// assumptions.
double topological_entropy(const Sft& sft);

// The unique equilibrium measure of p: trans[i][j] = M[i][j] r[j]/(lambda r[i]),
// pi[i] = l[i] r[i]. Lives on the recoded chain.
MarkovMeasure equilibrium(const LcPotential& p);
MarkovMeasure equilibrium_from(const PressureResult& pr);

// Entropy rate: -sum_i pi[i] sum_j t[i][j] log t[i][j], with 0 log 0 = 0.
double entropy(const MarkovMeasure& mu);

// Integral of p against mu. The measure is extended to blocks long enough to
// carry depth-k statistics, then summed over chain edges.
double integrate(const LcPotential& p, const MarkovMeasure& mu);

// Periodic-orbit partition sums: for each period q <= pmax, the estimate
// (1/q) log sum_{sigma^q x = x} exp(S_q p(x)). Approaches pressure(p) at rate
// O(1/q). Enumeration is guarded at 1e7 periodic points.
std::vector<std::pair<int, double>> pressure_oracle_orbits(const LcPotential& p, int pmax);

// Randomized variational oracle: best entropy + integral over `trials`
// random Markov measures on the recoded chain. Deterministic given the seed,
// and never above pressure(p) by more than rounding.
double pressure_oracle_variational(const LcPotential& p, int trials, std::uint64_t seed);

// Random Markov measure compatible with the shift: each row is drawn from the
// flat (Dirichlet(1,..,1)) distribution on its allowed entries, and the
// stationary vector is solved exactly.
MarkovMeasure random_markov(const Sft& base, SplitMix64& rng);
MarkovMeasure random_markov_on(const Recoding& rc, SplitMix64& rng);

} // namespace thermoflow
