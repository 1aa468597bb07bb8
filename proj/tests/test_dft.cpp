#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "surrogen/dft.hpp"
#include "surrogen/error.hpp"
#include "surrogen/rng.hpp"
#include "surrogen/time_series.hpp"

using surrogen::Error;
using surrogen::ErrorCode;
using surrogen::forward_dft;
using surrogen::inverse_dft;
using surrogen::parseval_gap;
using surrogen::RandomStream;
using surrogen::Spectrum;
using surrogen::TimeSeries;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_series(std::size_t n, RandomStream& rng,
                                  bool positive = false) {
    std::vector<double> v(n);
    for (double& x : v) {
        x = positive ? 1.0 + rng.next_unit() * 9.0 : rng.next_gaussian() * 3.0;
    }
    return v;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("constant signal has only a DC component") {
    const double c = 2.5;
    const Spectrum z = forward_dft(TimeSeries({c, c, c, c}));
    CHECK(z.amplitude(0) == doctest::Approx(4.0 * c).epsilon(1e-12));
    CHECK(z.phase(0) == 0.0);
    for (std::size_t w = 1; w < 4; ++w)
        CHECK(z.amplitude(w) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(z.is_real_symmetric());
}

TEST_CASE("unit impulse has a flat unit spectrum") {
    const Spectrum z = forward_dft(TimeSeries({1.0, 0.0, 0.0, 0.0}));
    for (std::size_t w = 0; w < 4; ++w) {
        CHECK(z.amplitude(w) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(z.phase(w) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("four-point sine line: [0,1,0,-1]") {
    const Spectrum z = forward_dft(TimeSeries({0.0, 1.0, 0.0, -1.0}));
    CHECK(z.amplitude(0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(z.amplitude(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(z.amplitude(2) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(z.amplitude(3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(z.phase(1) == doctest::Approx(-kPi / 2.0).epsilon(1e-12));
    CHECK(z.phase(3) == doctest::Approx(kPi / 2.0).epsilon(1e-12));

    const TimeSeries back = inverse_dft(z);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(back[k] ==
              doctest::Approx(std::vector<double>{0, 1, 0, -1}[k]).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("zeta_0 is N times the mean") {
    RandomStream rng(11);
    for (std::size_t n : {2, 3, 7, 16, 33}) {
        const TimeSeries s(random_series(n, rng));
        const Spectrum z = forward_dft(s);
        double sum = 0.0;
        for (std::size_t k = 0; k < n; ++k) sum += s[k];
        const double dc = z.amplitude(0) * std::cos(z.phase(0));
        CHECK(dc == doctest::Approx(sum).epsilon(1e-12).scale(1.0 + std::abs(sum)));
    }
}

TEST_CASE("forward matches the direct sum for all lengths up to 64") {
    RandomStream rng(42);
    for (std::size_t n = 2; n <= 64; ++n) {
        const TimeSeries s(random_series(n, rng));
        const Spectrum z = forward_dft(s);
        const auto ref = oracles::direct_dft(s);
        double scale = 1.0;
        for (const auto& c : ref) scale = std::max(scale, std::abs(c));
        for (std::size_t w = 0; w < n; ++w) {
            const std::complex<double> got = z.coefficient(w);
            CHECK(std::abs(got - ref[w]) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("round trip reproduces the input at every parity") {
    RandomStream rng(43);
    for (std::size_t n : {2,  3,  4,  5,  8,  9,   16,  17,  31,  32,  33, 64,
                          85, 99, 100, 101, 128, 255, 256, 365, 512, 745, 1024}) {
        const TimeSeries s(random_series(n, rng));
        const TimeSeries back = inverse_dft(forward_dft(s));
        const double tol = 1e-10 * (1.0 + max_abs(s.values()));
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(std::abs(back[k] - s[k]) <= tol);
        }
    }
}

TEST_CASE("spectra of real input are flagged and exactly mirrored") {
    RandomStream rng(44);
    for (std::size_t n : {6, 7, 12, 13}) {
        const Spectrum z = forward_dft(TimeSeries(random_series(n, rng)));
        CHECK(z.is_real_symmetric());
        for (std::size_t w = 1; w < (n + 1) / 2; ++w) {
            CHECK(z.amplitude(n - w) == z.amplitude(w));  // exact copy
            CHECK(z.phase(n - w) ==
                  Spectrum::canonicalize_phase(-z.phase(w)));
        }
        CHECK((z.phase(0) == 0.0 || z.phase(0) == doctest::Approx(kPi)));
        if (n % 2 == 0) {
            CHECK((z.phase(n / 2) == 0.0 || z.phase(n / 2) == doctest::Approx(kPi)));
        }
    }
}

TEST_CASE("DC-only spectrum inverts to a constant series") {
    const TimeSeries s =
        inverse_dft(Spectrum({12.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0}, true));
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(s[k] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("inverse rejects spectra without the symmetry flag") {
    const Spectrum z({1.0, 1.0, 1.0, 1.0}, {0.0, 0.0, 0.0, 0.0}, false);
    try {
        inverse_dft(z);
        FAIL("expected NotRealSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotRealSymmetric);
    }
}

TEST_CASE("a lying symmetry flag is caught by the residue check") {
    // Phases violate theta[2] == -theta[1] (N=3), so the inverse is complex.
    const Spectrum z({0.0, 1.0, 1.0}, {0.0, 1.0, 1.0}, true);
    try {
        inverse_dft(z);
        FAIL("expected ResidueTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResidueTooLarge);
    }
}

TEST_CASE("parseval gap is tiny for matching pairs and checks lengths") {
    RandomStream rng(45);
    for (std::size_t n : {2, 5, 16, 101, 365}) {
        const TimeSeries s(random_series(n, rng));
        double energy = 0.0;
        for (std::size_t k = 0; k < n; ++k) energy += s[k] * s[k];
        CHECK(parseval_gap(s, forward_dft(s)) <= 1e-9 * (1.0 + energy));
    }
    CHECK(parseval_gap(TimeSeries({1.0, 0.0, 0.0, 0.0}),
                       forward_dft(TimeSeries({1.0, 0.0, 0.0, 0.0}))) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    const TimeSeries s(random_series(4, rng));
    const Spectrum z = forward_dft(TimeSeries(random_series(6, rng)));
    CHECK_THROWS_AS(parseval_gap(s, z), Error);
}
