#include "surrogen/stats.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "surrogen/dft.hpp"
#include "surrogen/error.hpp"
#include "surrogen/spectrum.hpp"

namespace surrogen {

double mean(std::span<const double> s) {
    if (s.empty()) throw Error(ErrorCode::EmptySeries, "mean of empty series");
    double sum = 0.0;
    for (double x : s) sum += x;
    return sum / static_cast<double>(s.size());
}

double population_sd(std::span<const double> s) {
    const double mu = mean(s);
    double ss = 0.0;
    for (double x : s) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(s.size()));
}

SummaryStats summary_stats(std::span<const double> s) {
    const double mu = mean(s);
    const double n = static_cast<double>(s.size());
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : s) {
        const double d = x - mu;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    SummaryStats out;
    out.mean = mu;
    out.sd = std::sqrt(m2);
    if (m2 > 0.0) {
        out.skewness = m3 / (m2 * out.sd);
        out.kurtosis = m4 / (m2 * m2) - 3.0;
    }
    return out;
}

std::vector<double> circular_autocorr(std::span<const double> s) {
    // Wiener-Khinchin: the circular autocorrelation is the inverse DFT of
    // the squared amplitude spectrum. With the unnormalized-forward / (1/N)-
    // inverse convention the result is the raw sum_k s[k]*s[(k+tau) mod N].
    const Spectrum z = forward_dft(TimeSeries({s.begin(), s.end()}));
    std::vector<double> power(z.size());
    for (std::size_t w = 0; w < z.size(); ++w)
        power[w] = z.amplitude(w) * z.amplitude(w);
    return inverse_dft(Spectrum(std::move(power),
                                std::vector<double>(z.size(), 0.0),
                                /*real_symmetric=*/true))
        .values();
}

AcfResult acf(std::span<const double> s, std::size_t max_lag) {
    const std::size_t n = s.size();
    if (n < 2) throw Error(ErrorCode::TooShort, "acf needs at least 2 samples");
    if (max_lag < 1 || max_lag >= n) {
        throw Error(ErrorCode::LagOutOfRange,
                    "max_lag must satisfy 1 <= max_lag < N; got " +
                        std::to_string(max_lag) + " for N=" + std::to_string(n));
    }

    const double mu = mean(s);
    double denom = 0.0;
    for (double x : s) denom += (x - mu) * (x - mu);
    if (denom == 0.0) {
        throw Error(ErrorCode::ConstantSeries,
                    "acf is undefined for a constant series");
    }

    AcfResult out;
    out.r.resize(max_lag + 1);
    out.r[0] = 1.0;
    for (std::size_t tau = 1; tau <= max_lag; ++tau) {
        double num = 0.0;
        for (std::size_t k = 0; k + tau < n; ++k)
            num += (s[k] - mu) * (s[k + tau] - mu);
        out.r[tau] = num / denom;
    }
    out.confidence_band = 1.96 / std::sqrt(static_cast<double>(n));
    return out;
}

}  // namespace surrogen
