#pragma once

#include "thermoflow/potential.hpp"
#include "thermoflow/rng.hpp"
#include "thermoflow/suspension.hpp"

namespace thermoflow {

// Small reference shifts used by the verification suite and the tests.
Sft full_shift(int n);
// [[1,1],[1,0]]: the golden-mean shift, entropy log((1+sqrt 5)/2).
Sft golden_mean();
// 3 symbols, all transitions except self-loops; primitive with exponent 2.
Sft triangle3();

// Uniform values in [lo, hi].
LcPotential random_lc_potential(const Sft& sft, int depth, double lo, double hi,
                                SplitMix64& rng);

// Values in [0.5, 2.0]; keeps flow entropies in a well-conditioned range.
Roof random_roof(const Sft& sft, int depth, SplitMix64& rng);

// Polynomial coefficients in [-amp, amp] up to the given degree.
FiberPotential random_fiber(const Sft& sft, int depth, int degree, double amp,
                            SplitMix64& rng);

// Strictly positive potential with sup below its pressure: values in
// [0.9, 1.1], which qualifies whenever the base entropy exceeds 0.2.
LcPotential random_pressure_gap_potential(const Sft& sft, int depth, SplitMix64& rng);

// Strictly positive phi with P(-phi) = 0: the zero-pressure normalization of
// a potential with values in [-0.1, 0.1].
LcPotential random_zero_pressure_phi(const Sft& sft, int depth, SplitMix64& rng);

// Random admissible word of the requested length (uniform random walk).
Word random_admissible_word(const Sft& sft, int length, SplitMix64& rng);

} // namespace thermoflow
