#pragma once

#include <span>
#include <string>
#include <vector>

#include "surrogen/generator.hpp"
#include "surrogen/time_series.hpp"

namespace surrogen {

// Dynamic time warping distance between two series (either may be empty ->
// EmptySeries). The alignment is boundary-anchored with the usual
// three-step recurrence (match / insert / delete, unweighted); costs
// accumulate squared pointwise differences and a single square root is
// taken at the end.
double dtw(std::span<const double> a, std::span<const double> b);

// First Wasserstein distance between the empirical distributions of the
// two samples (either may be empty -> EmptySeries). Computed from sorted
// samples as the integral of the quantile gap; for equal lengths this is
// the mean absolute difference of the sorted values.
double wasserstein1(std::span<const double> a, std::span<const double> b);

struct Aggregate {
    double avg = 0.0;
    double sd = 0.0;  // population SD over the batch
};

struct ComparisonReport {
    SummaryStats source_stats;
    Aggregate surrogate_mean;
    Aggregate surrogate_sd;
    Aggregate surrogate_skewness;
    Aggregate surrogate_kurtosis;
    Aggregate dtw_distance;
    Aggregate wasserstein_distance;
    int count = 0;
};

// Per-surrogate summary stats and distances to the source, aggregated
// across the batch (EmptySeries when the batch has no surrogates).
ComparisonReport batch_metrics(const SurrogateBatch& batch, const TimeSeries& source);

}  // namespace surrogen
