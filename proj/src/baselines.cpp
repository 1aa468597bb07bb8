#include "surrogen/baselines.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "surrogen/error.hpp"
#include "surrogen/stats.hpp"

namespace surrogen {

void ArmaModel::validate() const {
    if (phi.empty() && theta.empty()) {
        throw Error(ErrorCode::InvalidArgument,
                    "ARMA model needs p + q >= 1");
    }
    for (double v : phi) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFinite, "non-finite AR coefficient");
    }
    for (double v : theta) {
        if (!std::isfinite(v))
            throw Error(ErrorCode::NonFinite, "non-finite MA coefficient");
    }
    if (!std::isfinite(c)) throw Error(ErrorCode::NonFinite, "non-finite intercept");
    if (!std::isfinite(sigma) || sigma <= 0.0) {
        throw Error(ErrorCode::InvalidArgument, "sigma must be > 0");
    }
}

TimeSeries arma_generate(const ArmaModel& model, std::size_t n, RandomStream& rng) {
    model.validate();
    if (n < 2) {
        throw Error(ErrorCode::TooShort,
                    "arma_generate needs n >= 2, got " + std::to_string(n));
    }
    const std::size_t p = model.phi.size();
    const std::size_t q = model.theta.size();
    const std::size_t burn_in = std::max<std::size_t>(200, 10 * (p + q));
    const std::size_t total = burn_in + n;

    // Zero-initialized state; the burn-in washes the startup transient out.
    std::vector<double> y(total, 0.0);
    std::vector<double> eps(total, 0.0);
    for (std::size_t t = 0; t < total; ++t) {
        eps[t] = model.sigma * rng.next_gaussian();
        double v = model.c + eps[t];
        for (std::size_t i = 0; i < p && i < t; ++i)
            v += model.phi[i] * y[t - 1 - i];
        for (std::size_t j = 0; j < q && j < t; ++j)
            v += model.theta[j] * eps[t - 1 - j];
        y[t] = v;
    }

    return TimeSeries({y.begin() + static_cast<std::ptrdiff_t>(burn_in), y.end()});
}

ArmaModel fit_ar_yule_walker(const TimeSeries& s, int p) {
    const std::size_t n = s.size();
    if (p < 1 || static_cast<std::size_t>(p) >= n / 2) {
        throw Error(ErrorCode::InvalidArgument,
                    "AR order must satisfy 1 <= p < N/2; got p=" +
                        std::to_string(p) + " for N=" + std::to_string(n));
    }

    // Biased (divisor-N) autocovariances keep the Toeplitz system positive
    // semidefinite, which keeps Levinson-Durbin's reflection steps bounded.
    const double mu = mean(s);
    std::vector<double> g(static_cast<std::size_t>(p) + 1, 0.0);
    for (std::size_t tau = 0; tau < g.size(); ++tau) {
        double acc = 0.0;
        for (std::size_t k = 0; k + tau < n; ++k)
            acc += (s[k] - mu) * (s[k + tau] - mu);
        g[tau] = acc / static_cast<double>(n);
    }
    if (g[0] <= 0.0) {
        throw Error(ErrorCode::ConstantSeries,
                    "cannot fit an AR model to a constant series");
    }

    // Levinson-Durbin recursion on the Yule-Walker equations.
    std::vector<double> phi(static_cast<std::size_t>(p) + 1, 0.0);
    std::vector<double> prev(phi.size(), 0.0);
    double error_var = g[0];
    for (std::size_t k = 1; k <= static_cast<std::size_t>(p); ++k) {
        double acc = g[k];
        for (std::size_t j = 1; j < k; ++j) acc -= prev[j] * g[k - j];
        if (!(error_var > 0.0) || !std::isfinite(acc)) {
            throw Error(ErrorCode::SingularSystem,
                        "Yule-Walker system is singular at order " +
                            std::to_string(k));
        }
        const double reflection = acc / error_var;
        phi = prev;
        phi[k] = reflection;
        for (std::size_t j = 1; j < k; ++j)
            phi[j] = prev[j] - reflection * prev[k - j];
        error_var *= 1.0 - reflection * reflection;
        prev = phi;
    }
    if (!(error_var > 0.0) || !std::isfinite(error_var)) {
        throw Error(ErrorCode::SingularSystem,
                    "Yule-Walker residual variance is not positive");
    }

    ArmaModel model;
    model.phi.assign(phi.begin() + 1, phi.end());
    double phi_sum = 0.0;
    for (double v : model.phi) phi_sum += v;
    model.c = mu * (1.0 - phi_sum);
    model.sigma = std::sqrt(error_var);
    model.validate();
    return model;
}

}  // namespace surrogen
