#include "surrogen/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "surrogen/error.hpp"
#include "surrogen/stats.hpp"

namespace surrogen {
namespace {

double squared(double a, double b) {
    const double d = a - b;
    return d * d;
}

Aggregate aggregate(const std::vector<double>& xs) {
    Aggregate out;
    out.avg = mean(xs);
    out.sd = population_sd(xs);
    return out;
}

}  // namespace

double dtw(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::EmptySeries, "dtw needs two non-empty series");
    }
    // Keep the rolling row on the shorter side; dtw is symmetric.
    if (b.size() > a.size()) std::swap(a, b);

    // row[j] holds the best accumulated SQUARED cost ending at (i, j); the
    // single square root happens at the end.
    std::vector<double> row(b.size());
    row[0] = squared(a[0], b[0]);
    for (std::size_t j = 1; j < b.size(); ++j)
        row[j] = row[j - 1] + squared(a[0], b[j]);

    for (std::size_t i = 1; i < a.size(); ++i) {
        double diag = row[0];  // cost at (i-1, j-1)
        row[0] += squared(a[i], b[0]);
        for (std::size_t j = 1; j < b.size(); ++j) {
            const double best = std::min({diag, row[j], row[j - 1]});
            diag = row[j];
            row[j] = squared(a[i], b[j]) + best;
        }
    }
    return std::sqrt(row.back());
}

double wasserstein1(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::EmptySeries,
                    "wasserstein1 needs two non-empty samples");
    }
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());

    // Integrate |F_x^{-1}(q) - F_y^{-1}(q)| over q in [0, 1]. Both quantile
    // functions are step functions with breakpoints at i/n and j/m; walk the
    // merged breakpoints.
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double q = 0.0, total = 0.0;
    while (i < x.size() && j < y.size()) {
        const double qx = static_cast<double>(i + 1) / nx;
        const double qy = static_cast<double>(j + 1) / ny;
        const double q_next = std::min(qx, qy);
        total += std::abs(x[i] - y[j]) * (q_next - q);
        q = q_next;
        if (qx <= q_next) ++i;
        if (qy <= q_next) ++j;
    }
    return total;
}

ComparisonReport batch_metrics(const SurrogateBatch& batch, const TimeSeries& source) {
    if (batch.surrogates.empty()) {
        throw Error(ErrorCode::EmptySeries, "batch_metrics needs a non-empty batch");
    }

    const std::size_t count = batch.surrogates.size();
    std::vector<double> means(count), sds(count), skews(count), kurts(count);
    std::vector<double> dtws(count), wds(count);
    for (std::size_t i = 0; i < count; ++i) {
        const TimeSeries& surrogate = batch.surrogates[i];
        const SummaryStats stats = summary_stats(surrogate);
        means[i] = stats.mean;
        sds[i] = stats.sd;
        skews[i] = stats.skewness;
        kurts[i] = stats.kurtosis;
        dtws[i] = dtw(surrogate, source);
        wds[i] = wasserstein1(surrogate, source);
    }

    ComparisonReport report;
    report.source_stats = summary_stats(source);
    report.surrogate_mean = aggregate(means);
    report.surrogate_sd = aggregate(sds);
    report.surrogate_skewness = aggregate(skews);
    report.surrogate_kurtosis = aggregate(kurts);
    report.dtw_distance = aggregate(dtws);
    report.wasserstein_distance = aggregate(wds);
    report.count = static_cast<int>(count);
    return report;
}

}  // namespace surrogen
