#include "surrogen/dft.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "surrogen/error.hpp"

namespace surrogen {
namespace {

// FFTW planning (create and destroy) is not thread-safe; execution on
// distinct buffers is. All plans here are FFTW_ESTIMATE and per-call, so
// results do not depend on accumulated planner wisdom.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwDeleter {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

template <typename T>
std::unique_ptr<T[], FftwDeleter> fftw_buffer(std::size_t n) {
    return std::unique_ptr<T[], FftwDeleter>(
        static_cast<T*>(fftw_malloc(sizeof(T) * n)));
}

// Amplitude/phase for a coefficient pinned to the real axis (DC, Nyquist).
void real_axis_polar(double re, double& rho, double& theta) {
    rho = std::abs(re);
    theta = (re < 0.0) ? std::numbers::pi : 0.0;
}

}  // namespace

Spectrum forward_dft(const TimeSeries& s) {
    const std::size_t n = s.size();
    const std::size_t half = n / 2;  // index of Nyquist when n is even

    auto in = fftw_buffer<double>(n);
    auto out = fftw_buffer<fftw_complex>(half + 1);
    for (std::size_t k = 0; k < n; ++k) in[k] = s[k];

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> rho(n), theta(n);

    // DC and (even n) Nyquist are exactly real for real input; derive their
    // phase from the sign so it lands exactly in {0, pi}.
    real_axis_polar(out[0][0], rho[0], theta[0]);
    if (n % 2 == 0) real_axis_polar(out[half][0], rho[half], theta[half]);

    // Lower half from the transform, upper half mirrored exactly so the
    // conjugate-symmetry invariant holds to the last bit.
    for (std::size_t w = 1; w < (n + 1) / 2; ++w) {
        const std::complex<double> z(out[w][0], out[w][1]);
        rho[w] = std::abs(z);
        theta[w] = std::arg(z);
        rho[n - w] = rho[w];
        theta[n - w] = Spectrum::canonicalize_phase(-theta[w]);
    }

    return Spectrum(std::move(rho), std::move(theta), /*real_symmetric=*/true);
}

TimeSeries inverse_dft(const Spectrum& z) {
    if (!z.is_real_symmetric()) {
        throw Error(ErrorCode::NotRealSymmetric,
                    "inverse_dft needs a real-symmetric spectrum");
    }
    const std::size_t n = z.size();

    auto in = fftw_buffer<fftw_complex>(n);
    auto out = fftw_buffer<fftw_complex>(n);
    double max_rho = 0.0;
    for (std::size_t w = 0; w < n; ++w) {
        const std::complex<double> c = z.coefficient(w);
        in[w][0] = c.real();
        in[w][1] = c.imag();
        max_rho = std::max(max_rho, z.amplitude(w));
    }

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(),
                                FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    // FFTW's backward transform is the plain e^{+i...} sum; apply 1/N and
    // verify the result is real before dropping the imaginary part.
    const double scale = 1.0 / static_cast<double>(n);
    const double residue_limit = 1e-9 * (1.0 + max_rho);
    std::vector<double> values(n);
    double max_residue = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        values[k] = out[k][0] * scale;
        max_residue = std::max(max_residue, std::abs(out[k][1] * scale));
    }
    if (max_residue > residue_limit) {
        throw Error(ErrorCode::ResidueTooLarge,
                    "imaginary residue " + std::to_string(max_residue) +
                        " exceeds " + std::to_string(residue_limit));
    }

    return TimeSeries(std::move(values));
}

double parseval_gap(const TimeSeries& s, const Spectrum& z) {
    if (s.size() != z.size()) {
        throw Error(ErrorCode::LengthMismatch,
                    "series length " + std::to_string(s.size()) +
                        " vs spectrum length " + std::to_string(z.size()));
    }
    double time_energy = 0.0;
    double freq_energy = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) time_energy += s[k] * s[k];
    for (std::size_t w = 0; w < z.size(); ++w)
        freq_energy += z.amplitude(w) * z.amplitude(w);
    return std::abs(time_energy - freq_energy / static_cast<double>(z.size()));
}

}  // namespace surrogen
