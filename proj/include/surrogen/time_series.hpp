#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace surrogen {

// A uniformly sampled, real-valued series. Immutable after construction;
// the constructor enforces N >= 2 and finiteness of every sample, so any
// held instance is valid. Units are carried as a label only and never
// enter a computation.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values, std::string units = {});

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& units() const noexcept { return units_; }

    operator std::span<const double>() const noexcept { return values_; }

private:
    std::vector<double> values_;
    std::string units_;
};

// Checked construction from raw samples.
// Errors: TooShort (fewer than 2 entries), NonFinite (NaN/inf, with index).
TimeSeries validate_series(std::vector<double> raw, std::string units = {});

// First four moments of a series. sd is the population (divisor-N) standard
// deviation; kurtosis is excess (normal -> 0). For a constant series
// skewness and kurtosis are 0 by convention.
struct SummaryStats {
    double mean = 0.0;
    double sd = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
};

}  // namespace surrogen
