#pragma once

#include "surrogen/spectrum.hpp"
#include "surrogen/time_series.hpp"

namespace surrogen {

// Forward DFT, unnormalized sum convention:
//   zeta[w] = sum_k s[k] * exp(-i*2*pi*k*w/N),  w = 0..N-1.
// The result is returned in polar form with the upper half mirrored exactly
// from the lower half (real input guarantees conjugate symmetry up to
// roundoff; mirroring makes it exact), so the spectrum always carries the
// real-symmetric flag. zeta[0] equals N * mean(s) up to roundoff.
// Any series length >= 2 is supported, powers of two or not.
Spectrum forward_dft(const TimeSeries& s);

// Inverse DFT with 1/N normalization:
//   s[k] = (1/N) * sum_w zeta[w] * exp(+i*2*pi*w*k/N).
// Requires a real-symmetric spectrum (NotRealSymmetric otherwise). The
// imaginary residue of the complex inverse must stay below
// 1e-9 * (1 + max amplitude); a larger residue is reported as
// ResidueTooLarge instead of being silently discarded.
TimeSeries inverse_dft(const Spectrum& z);

// |sum_k s[k]^2 - (1/N) * sum_w rho[w]^2|, a Parseval diagnostic.
// Expects z = forward_dft(s); LengthMismatch if sizes differ.
double parseval_gap(const TimeSeries& s, const Spectrum& z);

}  // namespace surrogen
