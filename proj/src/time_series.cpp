#include "surrogen/time_series.hpp"

#include <cmath>
#include <utility>

#include "surrogen/error.hpp"

namespace surrogen {

TimeSeries::TimeSeries(std::vector<double> values, std::string units)
    : values_(std::move(values)), units_(std::move(units)) {
    if (values_.size() < 2) {
        throw Error(ErrorCode::TooShort,
                    "series needs at least 2 samples, got " +
                        std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw Error(ErrorCode::NonFinite,
                        "non-finite sample at index " + std::to_string(i), i);
        }
    }
}

TimeSeries validate_series(std::vector<double> raw, std::string units) {
    return TimeSeries(std::move(raw), std::move(units));
}

}  // namespace surrogen
