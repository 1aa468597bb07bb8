#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "surrogen/time_series.hpp"

namespace surrogen {

struct AcfResult {
    std::vector<double> r;        // r[tau] for tau = 0..max_lag; r[0] == 1
    double confidence_band = 0.0; // +/- 1.96 / sqrt(N)
};

// Population moments (divisor N throughout). Skewness and excess kurtosis
// are 0 for a constant series rather than a 0/0.
SummaryStats summary_stats(std::span<const double> s);

double mean(std::span<const double> s);
double population_sd(std::span<const double> s);

// Circular (periodic) autocorrelation at every lag:
//   a[tau] = sum_k s[k] * s[(k + tau) mod N],   tau = 0..N-1.
// This is the raw energy sum -- no normalization -- so a[0] is the total
// signal energy. It is exactly what phase randomization preserves.
std::vector<double> circular_autocorr(std::span<const double> s);

// Sample (linear, mean-removed) autocorrelation with divisor-N covariances:
//   r[tau] = sum_{k=0}^{N-1-tau} (s[k]-mu)(s[k+tau]-mu) / sum_k (s[k]-mu)^2.
// max_lag must satisfy 1 <= max_lag < N (LagOutOfRange); a constant series
// has no autocorrelation structure (ConstantSeries).
AcfResult acf(std::span<const double> s, std::size_t max_lag);

}  // namespace surrogen
