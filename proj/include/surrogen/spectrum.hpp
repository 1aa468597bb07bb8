#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace surrogen {

// Polar form of a length-N DFT: amplitudes rho >= 0 and phases theta in
// (-pi, pi], with -pi canonicalized to +pi. A spectrum carrying the
// real-symmetric flag satisfies, exactly within construction tolerance,
//   rho[w] == rho[N-w],  theta[w] == -theta[N-w]  (mod 2*pi)  for 1 <= w < N,
//   theta[0] in {0, pi}, and for even N theta[N/2] in {0, pi},
// which guarantees a real inverse transform. Immutable after construction.
class Spectrum {
public:
    Spectrum(std::vector<double> amplitudes, std::vector<double> phases,
             bool real_symmetric);

    std::size_t size() const noexcept { return amplitudes_.size(); }
    double amplitude(std::size_t w) const noexcept { return amplitudes_[w]; }
    double phase(std::size_t w) const noexcept { return phases_[w]; }
    const std::vector<double>& amplitudes() const noexcept { return amplitudes_; }
    const std::vector<double>& phases() const noexcept { return phases_; }
    bool is_real_symmetric() const noexcept { return real_symmetric_; }

    std::complex<double> coefficient(std::size_t w) const;
    std::vector<std::complex<double>> to_complex() const;

    // Wraps any finite angle into (-pi, pi], mapping -pi to +pi.
    static double canonicalize_phase(double theta) noexcept;

private:
    std::vector<double> amplitudes_;
    std::vector<double> phases_;
    bool real_symmetric_;
};

}  // namespace surrogen
