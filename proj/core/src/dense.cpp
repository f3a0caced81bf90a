#include "dense.hpp"

#include <algorithm>
#include <limits>

namespace thermoflow::detail {

namespace {

void multiply(const DenseMatrix& m, const std::vector<double>& v, std::vector<double>& out,
              bool transpose) {
    const int n = m.n;
    out.assign(n, 0.0);
    if (!transpose) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j) acc += m.at(i, j) * v[j];
            out[i] = acc;
        }
    } else {
        for (int j = 0; j < n; ++j) {
            const double vj = v[j];
            if (vj == 0.0) continue;
            for (int i = 0; i < n; ++i) out[i] += m.at(j, i) * vj;
        }
    }
}

// Iterates v <- (M + cI) v / ||.||_1 with v kept on the probability simplex.
// The diagonal shift c does not move the eigenvectors but pushes oscillatory
// subdominant eigenvalues (near-periodic weight structure) strictly inside
// the spectral circle, which keeps the iteration geometric. The residual
// max_i |(Mv)_i - lam v_i| is invariant under the shift, so all stopping
// criteria are expressed against the unshifted eigenvalue estimate lam.
std::pair<std::vector<double>, long> power_iterate(const DenseMatrix& m, bool transpose,
                                                   long max_iter) {
    const int n = m.n;
    std::vector<double> v(n, 1.0 / n), w;

    // Warm-up estimate of lambda; the geometric mean of consecutive growth
    // factors is stable even when the iterates oscillate.
    double shift = 0.0;
    {
        double s_prev = 0.0, s_cur = 0.0;
        for (int it = 0; it < 8; ++it) {
            multiply(m, v, w, transpose);
            s_prev = s_cur;
            s_cur = 0.0;
            for (double x : w) s_cur += x;
            if (!(s_cur > 0.0) || !std::isfinite(s_cur))
                throw NoConvergence("power iteration produced a non-positive iterate");
            for (int i = 0; i < n; ++i) v[i] = w[i] / s_cur;
        }
        shift = (s_prev > 0.0) ? std::sqrt(s_prev * s_cur) : s_cur;
    }

    double prev = 0.0;
    double best_resid = std::numeric_limits<double>::infinity();
    int stall = 0;
    for (long it = 1; it <= max_iter; ++it) {
        multiply(m, v, w, transpose);
        for (int i = 0; i < n; ++i) w[i] += shift * v[i];
        double s = 0.0;
        for (double x : w) s += x;
        const double lam = s - shift;
        if (!(lam > 0.0) || !std::isfinite(lam))
            throw NoConvergence("power iteration produced a non-positive iterate");
        // Componentwise relative residual: stronger than the inf-norm bound,
        // and the quantity that keeps equilibrium transition rows stochastic
        // even when eigenvector components span many orders of magnitude.
        double resid = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!(v[i] > 0.0))
                throw NoConvergence("eigenvector component underflowed to zero");
            resid = std::max(resid, std::fabs(w[i] - s * v[i]) / (s * v[i]));
        }
        for (int i = 0; i < n; ++i) v[i] = w[i] / s;
        const bool est_ok = std::fabs(lam - prev) <= 1e-14 * lam;
        if (est_ok && resid <= 1e-14) return {v, it};
        // Stall = no 1% residual improvement across 500 iterations; that only
        // happens at the rounding floor, which is acceptable iff it sits
        // within the certified bound.
        if (resid < 0.99 * best_resid) {
            best_resid = resid;
            stall = 0;
        } else if (++stall > 500) {
            if (est_ok && resid <= 1e-13) return {v, it};
            throw NoConvergence("power iteration stalled above the residual bound");
        }
        prev = lam;
    }
    throw NoConvergence("power iteration hit the iteration cap");
}

} // namespace

PerronResult perron_eigen(const DenseMatrix& m) {
    constexpr long kMaxIter = 1'000'000;
    PerronResult out;
    auto [r, it_r] = power_iterate(m, false, kMaxIter);
    auto [l, it_l] = power_iterate(m, true, kMaxIter);
    out.right = std::move(r);
    out.left = std::move(l);
    out.iterations = it_r + it_l;

    // Rayleigh quotient through the left vector: quadratically accurate in
    // the remaining eigenvector error.
    std::vector<double> mr;
    multiply(m, out.right, mr, false);
    double num = 0.0, den = 0.0;
    for (int i = 0; i < m.n; ++i) {
        num += out.left[i] * mr[i];
        den += out.left[i] * out.right[i];
    }
    out.lambda = num / den;

    double resid = 0.0;
    for (int i = 0; i < m.n; ++i)
        resid = std::max(resid, std::fabs(mr[i] - out.lambda * out.right[i]));
    out.residual = resid;

    if (!(resid <= 1e-12 * out.lambda))
        throw NoConvergence("Perron eigenvalue iteration did not meet the residual bound");
    return out;
}

std::vector<double> solve_linear(DenseMatrix a, std::vector<double> b) {
    const int n = a.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::fabs(a.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            double v = std::fabs(a.at(i, col));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0) throw Error("singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        for (int i = col + 1; i < n; ++i) {
            double f = a.at(i, col) / a.at(col, col);
            if (f == 0.0) continue;
            a.at(i, col) = 0.0;
            for (int j = col + 1; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a.at(i, j) * x[j];
        x[i] = acc / a.at(i, i);
    }
    return x;
}

std::vector<double> stationary_distribution(const std::vector<std::vector<double>>& p) {
    const int n = static_cast<int>(p.size());
    DenseMatrix a(n);
    std::vector<double> b(n, 0.0);
    // (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = p[j][i] - (i == j ? 1.0 : 0.0);
    for (int j = 0; j < n; ++j) a.at(n - 1, j) = 1.0;
    b[n - 1] = 1.0;
    auto pi = solve_linear(std::move(a), std::move(b));
    double total = 0.0;
    for (double& x : pi) {
        if (x < 0.0) {
            if (x < -1e-12) throw Error("stationary distribution came out negative");
            x = 0.0;
        }
        total += x;
    }
    for (double& x : pi) x /= total;
    return pi;
}

} // namespace thermoflow::detail
