#pragma once

// Small dense-matrix helpers shared by the pressure and measure code. The
// matrices here are tiny (recoded alphabets, at most a few hundred states),
// so plain row-major doubles with O(n^3) algorithms are the right tool.

#include "thermoflow/errors.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

namespace thermoflow::detail {

struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    explicit DenseMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct PerronResult {
    double lambda = 0.0;
    std::vector<double> right;
    std::vector<double> left;
    long iterations = 0;
    double residual = 0.0; // ||M r - lambda r||_inf on the matrix as given
};

// Power iteration for a primitive nonnegative matrix: right vector, left
// vector from the transpose, then a Rayleigh-quotient refinement of lambda.
// Throws NoConvergence if the 1e6-iteration cap is hit without meeting the
// residual bound (impossible for primitive input, by design).
PerronResult perron_eigen(const DenseMatrix& m);

// Solves A x = b by Gaussian elimination with partial pivoting.
std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b);

// Stationary distribution of a row-stochastic matrix: solves pi P = pi,
// sum(pi) = 1 exactly (one linear solve), clamping sub-ulp negatives to 0.
std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& p);

} // namespace thermoflow::detail
