#pragma once

#include <cstdint>
#include <vector>

#include "surrogen/rng.hpp"
#include "surrogen/time_series.hpp"

namespace surrogen {

// ARMA(p, q) with Gaussian innovations:
//   X_t = c + sum_i phi_i X_{t-i} + eps_t + sum_j theta_j eps_{t-j}.
struct ArmaModel {
    std::vector<double> phi;    // AR coefficients, phi[0] multiplies X_{t-1}
    std::vector<double> theta;  // MA coefficients, theta[0] multiplies eps_{t-1}
    double c = 0.0;             // intercept
    double sigma = 1.0;         // innovation SD, must be > 0

    void validate() const;      // finite coefficients, sigma > 0
};

// Simulates n values from the model after a burn-in of
// max(200, 10 * (p + q)) steps; state starts at zero.
TimeSeries arma_generate(const ArmaModel& model, std::size_t n, RandomStream& rng);

// Fits a pure AR(p) by solving the Yule-Walker equations with
// Levinson-Durbin. Needs n > p and a non-constant series; the returned
// model has empty theta, c = mean(s) * (1 - sum(phi)), and sigma from the
// innovation variance of the final recursion step.
ArmaModel fit_ar_yule_walker(const TimeSeries& s, int p);

}  // namespace surrogen
