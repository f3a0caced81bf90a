#pragma once

#include "thermoflow/sft.hpp"

#include <vector>

namespace thermoflow {

// Locally constant potential of finite depth k: one real value per admissible
// k-word. These are the computable stand-ins for continuous functions on the
// shift; a continuous input to any construction here is a sequence of these
// with growing depth.
class LcPotential {
public:
    // `values` is parallel to sft.words(depth) in lexicographic order.
    LcPotential(Sft sft, int depth, std::vector<double> values);

    static LcPotential constant(const Sft& sft, double c);
    static LcPotential zero(const Sft& sft) { return constant(sft, 0.0); }

    const Sft& sft() const noexcept { return sft_; }
    int depth() const noexcept { return depth_; }
    const std::vector<Word>& words() const noexcept { return words_; }
    const std::vector<double>& values() const noexcept { return values_; }

    // Value on the depth-k prefix of w; throws WordTooShort if w is shorter
    // than the depth.
    double eval(const Word& w) const;

    double min_value() const;
    double max_value() const;

    // Same function represented on longer words.
    LcPotential refine(int new_depth) const;

    // Largest oscillation of the potential inside a single admissible j-word
    // cylinder; exactly 0 once j >= depth.
    double variation(int j) const;

    bool operator==(const LcPotential& o) const {
        return sft_ == o.sft_ && depth_ == o.depth_ && values_ == o.values_;
    }

private:
    Sft sft_;
    int depth_;
    std::vector<Word> words_;
    std::vector<double> values_;

    std::size_t index_of_prefix(const Word& w) const;
};

// alpha*p + beta*q at the common refinement depth. Throws MismatchedSft when
// the potentials live on different shifts.
LcPotential combine(const LcPotential& p, const LcPotential& q, double alpha, double beta);

LcPotential scale(const LcPotential& p, double alpha);

double sup_norm(const LcPotential& p);
double sup_dist(const LcPotential& p, const LcPotential& q);

// Strictly positive locally constant potential; the return-time function of a
// suspension flow. Construction rejects non-positive minima.
class Roof {
public:
    explicit Roof(LcPotential p);

    const LcPotential& potential() const noexcept { return pot_; }
    const Sft& sft() const noexcept { return pot_.sft(); }
    int depth() const noexcept { return pot_.depth(); }
    double min_value() const { return pot_.min_value(); }
    double max_value() const { return pot_.max_value(); }

    Roof refine(int new_depth) const { return Roof(pot_.refine(new_depth)); }

private:
    LcPotential pot_;
};

} // namespace thermoflow
