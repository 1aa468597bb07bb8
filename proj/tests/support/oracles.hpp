#pragma once

// Reference implementations used only by tests: direct-definition
// evaluations that are slow but obviously correct, kept deliberately
// independent of the library's algorithms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

namespace oracles {

// Direct O(N^2) evaluation of the unnormalized forward DFT sum.
inline std::vector<std::complex<double>> direct_dft(std::span<const double> s) {
    const std::size_t n = s.size();
    std::vector<std::complex<double>> z(n);
    for (std::size_t w = 0; w < n; ++w) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            // Reduce k*w mod N first so the angle stays small and exact.
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>((k * w) % n) /
                                 static_cast<double>(n);
            acc += s[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        z[w] = acc;
    }
    return z;
}

// Direct circular sum a[tau] = sum_k s[k] * s[(k+tau) mod N].
inline std::vector<double> direct_circular_autocorr(std::span<const double> s) {
    const std::size_t n = s.size();
    std::vector<double> a(n, 0.0);
    for (std::size_t tau = 0; tau < n; ++tau) {
        for (std::size_t k = 0; k < n; ++k) a[tau] += s[k] * s[(k + tau) % n];
    }
    return a;
}

namespace detail {

inline double dtw_paths(std::span<const double> a, std::span<const double> b,
                        std::size_t i, std::size_t j, double cost) {
    const double d = a[i] - b[j];
    cost += d * d;
    if (i + 1 == a.size() && j + 1 == b.size()) return cost;
    double best = std::numeric_limits<double>::infinity();
    if (i + 1 < a.size()) best = std::min(best, dtw_paths(a, b, i + 1, j, cost));
    if (j + 1 < b.size()) best = std::min(best, dtw_paths(a, b, i, j + 1, cost));
    if (i + 1 < a.size() && j + 1 < b.size())
        best = std::min(best, dtw_paths(a, b, i + 1, j + 1, cost));
    return best;
}

}  // namespace detail

// Exhaustive enumeration of every monotone boundary-anchored warping path.
// Exponential; fine for lengths <= 6.
inline double dtw_bruteforce(std::span<const double> a, std::span<const double> b) {
    return std::sqrt(detail::dtw_paths(a, b, 0, 0, 0.0));
}

// Minimum-cost perfect matching on a square cost matrix (Hungarian
// algorithm with potentials, O(n^3)).
inline double hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0);  // match[col] = row, 1-based
    for (std::size_t row = 1; row <= n; ++row) {
        match[0] = row;
        std::size_t j0 = 0;
        std::vector<double> dist(n + 1, inf);
        std::vector<std::size_t> from(n + 1, 0);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double reduced = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (reduced < dist[j]) {
                    dist[j] = reduced;
                    from[j] = j0;
                }
                if (dist[j] < delta) {
                    delta = dist[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    dist[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = from[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    double total = 0.0;
    for (std::size_t j = 1; j <= n; ++j) total += cost[match[j] - 1][j - 1];
    return total;
}

// Exact W1 between empirical distributions via minimal-cost transport:
// replicate each sample to equal-mass atoms (lcm of the sizes), then solve
// the assignment problem. Knows nothing about sorting or quantiles.
inline double wasserstein_transport(std::span<const double> a,
                                    std::span<const double> b) {
    const std::size_t na = a.size(), nb = b.size();
    const std::size_t l = std::lcm(na, nb);
    std::vector<double> xs, ys;
    xs.reserve(l);
    ys.reserve(l);
    for (double x : a) xs.insert(xs.end(), l / na, x);
    for (double y : b) ys.insert(ys.end(), l / nb, y);
    std::vector<std::vector<double>> cost(l, std::vector<double>(l));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) cost[i][j] = std::abs(xs[i] - ys[j]);
    }
    return hungarian(cost) / static_cast<double>(l);
}

}  // namespace oracles
