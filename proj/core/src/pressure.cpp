#include "thermoflow/pressure.hpp"

#include "thermoflow/errors.hpp"
#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace thermoflow {

namespace {

std::vector<Word> singleton_blocks(const Sft& sft) {
    std::vector<Word> blocks(sft.alphabet_size());
    for (int i = 0; i < sft.alphabet_size(); ++i) blocks[i] = Word{i};
    return blocks;
}

std::size_t block_index(const std::vector<Word>& blocks, const Word& w) {
    auto it = std::lower_bound(blocks.begin(), blocks.end(), w);
    if (it == blocks.end() || *it != w) throw ValidationError("block word not found");
    return static_cast<std::size_t>(it - blocks.begin());
}

} // namespace

Recoding recode_two_block(const LcPotential& p) {
    const Sft& base = p.sft();
    const int k = p.depth();
    if (k <= 2) {
        return Recoding{base, base, 1, singleton_blocks(base), p.refine(2)};
    }
    const int b = k - 1;
    auto blocks = base.words(b);
    const int s = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> rows(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            // Edge iff the blocks overlap in b-1 symbols; the merged k-word
            // is then automatically admissible.
            if (std::equal(blocks[i].begin() + 1, blocks[i].end(), blocks[j].begin()))
                rows[i][j] = 1;
        }
    }
    Sft chain(s, rows);
    auto edges = chain.words(2);
    std::vector<double> vals(edges.size());
    Word merged(k);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Word& wi = blocks[edges[e][0]];
        const Word& wj = blocks[edges[e][1]];
        std::copy(wi.begin(), wi.end(), merged.begin());
        merged[k - 1] = wj[b - 1];
        vals[e] = p.eval(merged);
    }
    LcPotential edge_potential(chain, 2, std::move(vals));
    return Recoding{std::move(chain), base, b, std::move(blocks), std::move(edge_potential)};
}

MarkovMeasure::MarkovMeasure(Sft chain, Sft base, int block_len, std::vector<Word> blocks,
                             std::vector<double> pi, std::vector<std::vector<double>> trans)
    : chain_(std::move(chain)), base_(std::move(base)), block_len_(block_len),
      blocks_(std::move(blocks)), pi_(std::move(pi)), trans_(std::move(trans)) {
    const int s = chain_.alphabet_size();
    if (static_cast<int>(pi_.size()) != s || static_cast<int>(trans_.size()) != s ||
        static_cast<int>(blocks_.size()) != s)
        throw ValidationError("Markov measure dimensions do not match the chain");
    if (block_len_ < 1) throw ValidationError("block length must be >= 1");
    for (const auto& w : blocks_) {
        if (static_cast<int>(w.size()) != block_len_ || !base_.admissible(w))
            throw ValidationError("block dictionary entry is not an admissible base word");
    }
    double total = 0.0;
    for (double x : pi_) {
        if (!(x >= 0.0) || !std::isfinite(x))
            throw ValidationError("stationary vector entries must be nonnegative");
        total += x;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw ValidationError("stationary vector must sum to 1");
    for (int i = 0; i < s; ++i) {
        if (static_cast<int>(trans_[i].size()) != s)
            throw ValidationError("transition matrix must be square");
        double row = 0.0;
        for (int j = 0; j < s; ++j) {
            double t = trans_[i][j];
            if (!(t >= 0.0) || !std::isfinite(t))
                throw ValidationError("transition probabilities must be nonnegative");
            if (t > 0.0 && !chain_.edge(i, j))
                throw ValidationError("transition mass on a forbidden edge");
            row += t;
        }
        if (std::fabs(row - 1.0) > 1e-12)
            throw ValidationError("transition matrix rows must sum to 1");
    }
    for (int j = 0; j < s; ++j) {
        double acc = 0.0;
        for (int i = 0; i < s; ++i) acc += pi_[i] * trans_[i][j];
        if (std::fabs(acc - pi_[j]) > 1e-12)
            throw ValidationError("stationary vector is not invariant under the transition matrix");
    }
}

MarkovMeasure MarkovMeasure::on_base(const Sft& base, std::vector<double> pi,
                                     std::vector<std::vector<double>> trans) {
    return MarkovMeasure(base, base, 1, singleton_blocks(base), std::move(pi),
                         std::move(trans));
}

std::vector<double> MarkovMeasure::symbol_marginal() const {
    std::vector<double> out(base_.alphabet_size(), 0.0);
    for (std::size_t w = 0; w < blocks_.size(); ++w) out[blocks_[w][0]] += pi_[w];
    return out;
}

double MarkovMeasure::trans_sup_dist(const MarkovMeasure& o) const {
    if (chain_ != o.chain_ || block_len_ != o.block_len_)
        throw MismatchedSft("measures live on different chains");
    double d = 0.0;
    for (std::size_t i = 0; i < trans_.size(); ++i)
        for (std::size_t j = 0; j < trans_[i].size(); ++j)
            d = std::max(d, std::fabs(trans_[i][j] - o.trans_[i][j]));
    return d;
}

bool MarkovMeasure::full_support() const {
    const int s = chain_.alphabet_size();
    for (int i = 0; i < s; ++i) {
        if (!(pi_[i] > 0.0)) return false;
        for (int j = 0; j < s; ++j)
            if (chain_.edge(i, j) && !(trans_[i][j] > 0.0)) return false;
    }
    return true;
}

MarkovMeasure extend_markov(const MarkovMeasure& mu, int target_block_len) {
    const int b = mu.block_len();
    if (target_block_len == b) return mu;
    if (target_block_len < b)
        throw ValidationError("cannot extend a Markov measure to shorter blocks");
    const Sft& base = mu.base();
    auto blocks = base.words(target_block_len);
    const int s = static_cast<int>(blocks.size());

    auto sub_block_index = [&](const Word& w, int from) {
        Word sub(w.begin() + from, w.begin() + from + b);
        return block_index(mu.blocks(), sub);
    };

    std::vector<double> pi(s, 0.0);
    for (int w = 0; w < s; ++w) {
        double mass = mu.pi()[sub_block_index(blocks[w], 0)];
        for (int i = 1; i + b <= target_block_len; ++i) {
            mass *= mu.trans()[sub_block_index(blocks[w], i - 1)][sub_block_index(blocks[w], i)];
            if (mass == 0.0) break;
        }
        pi[w] = mass;
    }

    std::vector<std::vector<int>> rows(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (std::equal(blocks[i].begin() + 1, blocks[i].end(), blocks[j].begin()))
                rows[i][j] = 1;
    Sft chain(s, rows);

    std::vector<std::vector<double>> trans(s, std::vector<double>(s, 0.0));
    const int tail = target_block_len - b;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            if (!rows[i][j]) continue;
            trans[i][j] = mu.trans()[sub_block_index(blocks[i], tail)][sub_block_index(blocks[j], tail)];
        }
    }
    return MarkovMeasure(std::move(chain), base, target_block_len, std::move(blocks),
                         std::move(pi), std::move(trans));
}

namespace {

// Weighted transition matrix of the recoded potential, with the values
// shifted by their maximum so exp never overflows. The shift adds back into
// the reported pressure and cancels everywhere else.
detail::DenseMatrix weighted_matrix(const Recoding& rc, double shift) {
    const int s = rc.chain.alphabet_size();
    detail::DenseMatrix m(s);
    const auto& edges = rc.edge_potential.words();
    const auto& vals = rc.edge_potential.values();
    for (std::size_t e = 0; e < edges.size(); ++e)
        m.at(edges[e][0], edges[e][1]) = std::exp(vals[e] - shift);
    return m;
}

} // namespace

PressureResult pressure(const LcPotential& p) {
    Recoding rc = recode_two_block(p);
    const double shift = rc.edge_potential.max_value();
    detail::DenseMatrix m = weighted_matrix(rc, shift);
    detail::PerronResult pe = detail::perron_eigen(m);

    double value = std::log(pe.lambda) + shift;
    double dot = 0.0;
    for (std::size_t i = 0; i < pe.left.size(); ++i) dot += pe.left[i] * pe.right[i];
    for (double& x : pe.left) x /= dot;

    PressureResult out{value,
                       std::exp(value),
                       std::move(pe.left),
                       std::move(pe.right),
                       std::max(p.depth(), 2),
                       pe.iterations,
                       std::move(rc)};
    return out;
}

double topological_entropy(const Sft& sft) {
    return pressure(LcPotential::zero(sft)).value;
}

MarkovMeasure equilibrium_from(const PressureResult& pr) {
    const Recoding& rc = pr.recoding;
    const int s = rc.chain.alphabet_size();
    const double shift = rc.edge_potential.max_value();
    detail::DenseMatrix m = weighted_matrix(rc, shift);
    const double lambda_shifted = std::exp(pr.value - shift);

    std::vector<std::vector<double>> trans(s, std::vector<double>(s, 0.0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (rc.chain.edge(i, j))
                trans[i][j] = m.at(i, j) * pr.right[j] / (lambda_shifted * pr.right[i]);

    std::vector<double> pi(s);
    double total = 0.0;
    for (int i = 0; i < s; ++i) {
        pi[i] = pr.left[i] * pr.right[i];
        total += pi[i];
    }
    for (double& x : pi) x /= total;

    return MarkovMeasure(rc.chain, rc.base, rc.block_len, rc.blocks, std::move(pi),
                         std::move(trans));
}

MarkovMeasure equilibrium(const LcPotential& p) { return equilibrium_from(pressure(p)); }

double entropy(const MarkovMeasure& mu) {
    double h = 0.0;
    const auto& t = mu.trans();
    for (std::size_t i = 0; i < t.size(); ++i) {
        double row = 0.0;
        for (double x : t[i])
            if (x > 0.0) row += x * std::log(x);
        h -= mu.pi()[i] * row;
    }
    return h;
}

double integrate(const LcPotential& p, const MarkovMeasure& mu) {
    if (p.sft() != mu.base())
        throw MismatchedSft("potential and measure live over different shifts");
    const int needed = std::max(p.depth() - 1, mu.block_len());
    const MarkovMeasure m = extend_markov(mu, needed);

    double acc = 0.0;
    const int s = m.chain().alphabet_size();
    Word merged(needed + 1);
    for (int i = 0; i < s; ++i) {
        if (m.pi()[i] == 0.0) continue;
        std::copy(m.blocks()[i].begin(), m.blocks()[i].end(), merged.begin());
        for (int j : m.chain().out_neighbors(i)) {
            const double w = m.pi()[i] * m.trans()[i][j];
            if (w == 0.0) continue;
            merged[needed] = m.blocks()[j][needed - 1];
            acc += w * p.eval(merged);
        }
    }
    return acc;
}

std::vector<std::pair<int, double>> pressure_oracle_orbits(const LcPotential& p, int pmax) {
    if (pmax < 1) throw ValidationError("pmax must be >= 1");
    const Sft& sft = p.sft();
    std::uint64_t total = 0;
    for (int q = 1; q <= pmax; ++q) {
        total += sft.periodic_point_count(q);
        if (total > 10'000'000ULL)
            throw TooLarge("periodic-point enumeration exceeds the 1e7 guard");
    }

    const int k = p.depth();
    std::vector<std::pair<int, double>> out;
    Word cycle, window(k);
    for (int q = 1; q <= pmax; ++q) {
        double z = 0.0;
        cycle.clear();
        // Enumerate admissible cyclic words of length q.
        auto rec = [&](auto&& self, int sym) -> void {
            cycle.push_back(sym);
            if (static_cast<int>(cycle.size()) == q) {
                if (sft.edge(cycle.back(), cycle.front())) {
                    double birkhoff = 0.0;
                    for (int i = 0; i < q; ++i) {
                        for (int t = 0; t < k; ++t) window[t] = cycle[(i + t) % q];
                        birkhoff += p.eval(window);
                    }
                    z += std::exp(birkhoff);
                }
            } else {
                for (int next : sft.out_neighbors(sym)) self(self, next);
            }
            cycle.pop_back();
        };
        for (int s = 0; s < sft.alphabet_size(); ++s) rec(rec, s);
        out.emplace_back(q, std::log(z) / q);
    }
    return out;
}

namespace {

std::vector<std::vector<double>> random_stochastic_rows(const Sft& chain, SplitMix64& rng) {
    const int s = chain.alphabet_size();
    std::vector<std::vector<double>> trans(s, std::vector<double>(s, 0.0));
    for (int i = 0; i < s; ++i) {
        // Flat simplex sampling via normalized exponentials.
        double row = 0.0;
        for (int j : chain.out_neighbors(i)) {
            double e = -std::log(rng.uniform01_open0());
            trans[i][j] = e;
            row += e;
        }
        for (int j : chain.out_neighbors(i)) trans[i][j] /= row;
    }
    return trans;
}

} // namespace

MarkovMeasure random_markov(const Sft& base, SplitMix64& rng) {
    auto trans = random_stochastic_rows(base, rng);
    auto pi = detail::stationary_distribution(trans);
    return MarkovMeasure::on_base(base, std::move(pi), std::move(trans));
}

MarkovMeasure random_markov_on(const Recoding& rc, SplitMix64& rng) {
    auto trans = random_stochastic_rows(rc.chain, rng);
    auto pi = detail::stationary_distribution(trans);
    return MarkovMeasure(rc.chain, rc.base, rc.block_len, rc.blocks, std::move(pi),
                         std::move(trans));
}

double pressure_oracle_variational(const LcPotential& p, int trials, std::uint64_t seed) {
    if (trials < 1) throw ValidationError("trials must be >= 1");
    Recoding rc = recode_two_block(p);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < trials; ++j) {
        SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(j)));
        MarkovMeasure mu = random_markov_on(rc, rng);
        best = std::max(best, entropy(mu) + integrate(p, mu));
    }
    return best;
}

} // namespace thermoflow
