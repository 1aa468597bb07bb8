#include <doctest.h>

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "surrogen/error.hpp"
#include "surrogen/time_series.hpp"

using surrogen::Error;
using surrogen::ErrorCode;
using surrogen::TimeSeries;

TEST_CASE("construction keeps values and units") {
    const TimeSeries s({1.0, 2.5, -3.0}, "MW");
    CHECK(s.size() == 3);
    CHECK(s[0] == 1.0);
    CHECK(s[2] == -3.0);
    CHECK(s.units() == "MW");
    CHECK(s.values() == std::vector<double>{1.0, 2.5, -3.0});
}

TEST_CASE("fewer than two samples is rejected") {
    CHECK_THROWS_AS(TimeSeries({}), Error);
    try {
        TimeSeries s({1.0});
        FAIL("expected TooShort");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooShort);
    }
}

TEST_CASE("non-finite samples are rejected with their index") {
    for (double bad : {std::numeric_limits<double>::quiet_NaN(),
                       std::numeric_limits<double>::infinity(),
                       -std::numeric_limits<double>::infinity()}) {
        try {
            TimeSeries s({0.0, 1.0, bad, 3.0});
            FAIL("expected NonFinite");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonFinite);
            CHECK(e.index() == 2);
        }
    }
}

TEST_CASE("validate_series is the checked constructor") {
    const TimeSeries s = surrogen::validate_series({4.0, 5.0}, "ppb");
    CHECK(s.size() == 2);
    CHECK(s.units() == "ppb");
    CHECK_THROWS_AS(surrogen::validate_series({1.0}), Error);
}

TEST_CASE("a series converts to a read-only span") {
    const TimeSeries s({1.0, 2.0, 3.0});
    const std::span<const double> view = s;
    CHECK(view.size() == 3);
    CHECK(view[1] == 2.0);
}
