#include "surrogen/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "surrogen/error.hpp"

namespace surrogen {

double Spectrum::canonicalize_phase(double theta) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double t = std::remainder(theta, two_pi);  // [-pi, pi]
    if (t <= -std::numbers::pi) t = std::numbers::pi;
    return t;
}

Spectrum::Spectrum(std::vector<double> amplitudes, std::vector<double> phases,
                   bool real_symmetric)
    : amplitudes_(std::move(amplitudes)),
      phases_(std::move(phases)),
      real_symmetric_(real_symmetric) {
    if (amplitudes_.size() != phases_.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "amplitude/phase length mismatch: " +
                        std::to_string(amplitudes_.size()) + " vs " +
                        std::to_string(phases_.size()));
    }
    if (amplitudes_.size() < 2) {
        throw Error(ErrorCode::TooShort, "spectrum needs at least 2 coefficients");
    }
    for (std::size_t w = 0; w < amplitudes_.size(); ++w) {
        if (!std::isfinite(amplitudes_[w]) || amplitudes_[w] < 0.0) {
            throw Error(ErrorCode::InvalidArgument,
                        "amplitude must be finite and >= 0 at w=" + std::to_string(w), w);
        }
        if (!std::isfinite(phases_[w])) {
            throw Error(ErrorCode::NonFinite, "non-finite phase at w=" + std::to_string(w), w);
        }
        phases_[w] = canonicalize_phase(phases_[w]);
    }
}

std::complex<double> Spectrum::coefficient(std::size_t w) const {
    return std::polar(amplitudes_[w], phases_[w]);
}

std::vector<std::complex<double>> Spectrum::to_complex() const {
    std::vector<std::complex<double>> z(size());
    for (std::size_t w = 0; w < size(); ++w) z[w] = coefficient(w);
    return z;
}

}  // namespace surrogen
