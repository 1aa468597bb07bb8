#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

#include "surrogen/baselines.hpp"
#include "surrogen/error.hpp"
#include "surrogen/rng.hpp"
#include "surrogen/stats.hpp"
#include "surrogen/time_series.hpp"

using surrogen::acf;
using surrogen::arma_generate;
using surrogen::ArmaModel;
using surrogen::Error;
using surrogen::ErrorCode;
using surrogen::fit_ar_yule_walker;
using surrogen::RandomStream;
using surrogen::TimeSeries;

TEST_CASE("model validation") {
    ArmaModel empty;
    CHECK_THROWS_AS(empty.validate(), Error);

    ArmaModel bad_sigma;
    bad_sigma.phi = {0.5};
    bad_sigma.sigma = 0.0;
    CHECK_THROWS_AS(bad_sigma.validate(), Error);

    ArmaModel ok;
    ok.phi = {0.5};
    ok.validate();
    ArmaModel ma_only;
    ma_only.theta = {0.3};
    ma_only.validate();
}

TEST_CASE("generation is deterministic for a fixed stream") {
    ArmaModel model;
    model.phi = {0.6};
    model.theta = {0.2};
    model.c = 1.0;
    RandomStream a(42), b(42);
    const TimeSeries x = arma_generate(model, 500, a);
    const TimeSeries y = arma_generate(model, 500, b);
    CHECK(x.values() == y.values());
}

TEST_CASE("AR(1) with zero coefficient is noise around the intercept") {
    ArmaModel model;
    model.phi = {0.0};
    model.c = 5.0;
    RandomStream rng(7);
    const TimeSeries s = arma_generate(model, 10000, rng);
    CHECK(surrogen::mean(s) == doctest::Approx(5.0).epsilon(0.01));
}

TEST_CASE("AR(1) phi=0.8 shows the theoretical lag-1 autocorrelation") {
    ArmaModel model;
    model.phi = {0.8};
    RandomStream rng(8);
    const TimeSeries s = arma_generate(model, 100000, rng);
    const auto res = acf(s, 1);
    CHECK(res.r[1] == doctest::Approx(0.8).epsilon(0.025));
}

TEST_CASE("fit recovers AR(1) parameters from simulated data") {
    ArmaModel truth;
    truth.phi = {0.8};
    truth.c = 5.0;  // process mean 25
    RandomStream rng(9);
    const TimeSeries s = arma_generate(truth, 10000, rng);
    const ArmaModel fit = fit_ar_yule_walker(s, 1);
    REQUIRE(fit.phi.size() == 1);
    CHECK(fit.theta.empty());
    CHECK(fit.phi[0] > 0.75);
    CHECK(fit.phi[0] < 0.85);
    CHECK(fit.c == doctest::Approx(5.0).epsilon(0.15));
    CHECK(fit.sigma == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("fit recovers AR(2) parameters within 0.05") {
    ArmaModel truth;
    truth.phi = {0.5, 0.2};
    RandomStream rng(10);
    const TimeSeries s = arma_generate(truth, 10000, rng);
    const ArmaModel fit = fit_ar_yule_walker(s, 2);
    REQUIRE(fit.phi.size() == 2);
    CHECK(std::abs(fit.phi[0] - 0.5) < 0.05);
    CHECK(std::abs(fit.phi[1] - 0.2) < 0.05);
}

TEST_CASE("white noise fits to a near-zero AR(1) coefficient") {
    ArmaModel noise;
    noise.phi = {0.0};
    RandomStream rng(11);
    const TimeSeries s = arma_generate(noise, 10000, rng);
    const ArmaModel fit = fit_ar_yule_walker(s, 1);
    CHECK(std::abs(fit.phi[0]) < 0.05);
}

TEST_CASE("Levinson solve agrees with a dense Toeplitz solve") {
    ArmaModel truth;
    truth.phi = {0.4, 0.25, -0.2};
    RandomStream rng(12);
    const TimeSeries s = arma_generate(truth, 5000, rng);
    const ArmaModel fit = fit_ar_yule_walker(s, 3);

    // Reference: build the Yule-Walker system from the same biased
    // autocovariances and solve it densely.
    const std::size_t n = s.size();
    const double mu = surrogen::mean(s);
    std::vector<double> g(4, 0.0);
    for (std::size_t tau = 0; tau < 4; ++tau) {
        for (std::size_t k = 0; k + tau < n; ++k)
            g[tau] += (s[k] - mu) * (s[k + tau] - mu);
        g[tau] /= static_cast<double>(n);
    }
    Eigen::Matrix3d toeplitz;
    Eigen::Vector3d rhs;
    for (int i = 0; i < 3; ++i) {
        rhs(i) = g[static_cast<std::size_t>(i) + 1];
        for (int j = 0; j < 3; ++j) toeplitz(i, j) = g[static_cast<std::size_t>(std::abs(i - j))];
    }
    const Eigen::Vector3d ref = toeplitz.fullPivLu().solve(rhs);
    for (int i = 0; i < 3; ++i) {
        CHECK(fit.phi[static_cast<std::size_t>(i)] ==
              doctest::Approx(ref(i)).epsilon(1e-10));
    }
}

TEST_CASE("fit validation") {
    const TimeSeries constant({2.0, 2.0, 2.0, 2.0, 2.0, 2.0});
    try {
        fit_ar_yule_walker(constant, 1);
        FAIL("expected ConstantSeries");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConstantSeries);
    }

    const TimeSeries short_series({1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(fit_ar_yule_walker(short_series, 2), Error);  // p >= N/2
    CHECK_THROWS_AS(fit_ar_yule_walker(short_series, 0), Error);
}

TEST_CASE("generation length checks") {
    ArmaModel model;
    model.phi = {0.5};
    RandomStream rng(13);
    CHECK_THROWS_AS(arma_generate(model, 1, rng), Error);
    CHECK(arma_generate(model, 2, rng).size() == 2);
}
