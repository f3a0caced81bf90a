#include "thermoflow/potential.hpp"

#include "thermoflow/errors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace thermoflow {

LcPotential::LcPotential(Sft sft, int depth, std::vector<double> values)
    : sft_(std::move(sft)), depth_(depth), words_(sft_.words(depth)),
      values_(std::move(values)) {
    if (depth_ < 1) throw ValidationError("potential depth must be >= 1");
    if (values_.size() != words_.size())
        throw ValidationError("potential must define a value for every admissible word");
    for (double v : values_)
        if (!std::isfinite(v)) throw ValidationError("potential values must be finite");
}

LcPotential LcPotential::constant(const Sft& sft, double c) {
    return LcPotential(sft, 1, std::vector<double>(sft.alphabet_size(), c));
}

std::size_t LcPotential::index_of_prefix(const Word& w) const {
    // words_ is lexicographically sorted; locate the depth-k prefix.
    Word prefix(w.begin(), w.begin() + depth_);
    auto it = std::lower_bound(words_.begin(), words_.end(), prefix);
    if (it == words_.end() || *it != prefix)
        throw ValidationError("word is not admissible for this potential");
    return static_cast<std::size_t>(it - words_.begin());
}

double LcPotential::eval(const Word& w) const {
    if (static_cast<int>(w.size()) < depth_)
        throw WordTooShort("word of length " + std::to_string(w.size()) +
                           " is shorter than potential depth " + std::to_string(depth_));
    return values_[index_of_prefix(w)];
}

double LcPotential::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double LcPotential::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

LcPotential LcPotential::refine(int new_depth) const {
    if (new_depth < depth_) throw ValidationError("refine cannot reduce depth");
    if (new_depth == depth_) return *this;
    auto longer = sft_.words(new_depth);
    std::vector<double> vals(longer.size());
    for (std::size_t i = 0; i < longer.size(); ++i) vals[i] = eval(longer[i]);
    return LcPotential(sft_, new_depth, std::move(vals));
}

double LcPotential::variation(int j) const {
    if (j < 1) throw ValidationError("variation order must be >= 1");
    if (j >= depth_) return 0.0;
    // Words sharing a j-prefix are contiguous in lexicographic order.
    double worst = 0.0;
    std::size_t i = 0;
    while (i < words_.size()) {
        std::size_t e = i;
        double lo = values_[i], hi = values_[i];
        while (e < words_.size() &&
               std::equal(words_[i].begin(), words_[i].begin() + j, words_[e].begin())) {
            lo = std::min(lo, values_[e]);
            hi = std::max(hi, values_[e]);
            ++e;
        }
        worst = std::max(worst, hi - lo);
        i = e;
    }
    return worst;
}

LcPotential combine(const LcPotential& p, const LcPotential& q, double alpha, double beta) {
    if (p.sft() != q.sft())
        throw MismatchedSft("cannot combine potentials over different shifts");
    int k = std::max(p.depth(), q.depth());
    LcPotential a = p.refine(k);
    LcPotential b = q.refine(k);
    std::vector<double> vals(a.values().size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = alpha * a.values()[i] + beta * b.values()[i];
    return LcPotential(p.sft(), k, std::move(vals));
}

LcPotential scale(const LcPotential& p, double alpha) {
    std::vector<double> vals(p.values().size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = alpha * p.values()[i];
    return LcPotential(p.sft(), p.depth(), std::move(vals));
}

double sup_norm(const LcPotential& p) {
    double m = 0.0;
    for (double v : p.values()) m = std::max(m, std::fabs(v));
    return m;
}

double sup_dist(const LcPotential& p, const LcPotential& q) {
    return sup_norm(combine(p, q, 1.0, -1.0));
}

Roof::Roof(LcPotential p) : pot_(std::move(p)) {
    if (!(pot_.min_value() > 0.0))
        throw NotPositive("roof must be strictly positive");
}

} // namespace thermoflow
