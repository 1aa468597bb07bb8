#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "surrogen/metrics.hpp"

namespace surrogen::io {

struct ReportOptions {
    std::size_t max_lag = 10;  // ACF table depth
    int bins = 30;             // histogram bins, shared edges for all series
};

// Machine-readable table: metric,source,avg,sd with rows Mean, SD,
// Skewness, Kurtosis, DTW, WD. The source column is empty for the
// distance rows.
void write_report_csv(const std::filesystem::path& path, const ComparisonReport& report);

// The same table as markdown with "avg ± sd" cells. A non-empty note
// (e.g. fitted model parameters) is appended as a trailing line.
void write_report_md(const std::filesystem::path& path, const ComparisonReport& report,
                     const std::string& note = {});

// Per-series sample ACF rows: series_id,lag,acf,ci_low,ci_high where
// series_id is "source" or "s0000", "s0001", ... and the band is the
// +/- 1.96/sqrt(N) white-noise interval.
void write_acf_csv(const std::filesystem::path& path, std::span<const double> source,
                   const std::vector<std::vector<double>>& surrogates,
                   std::size_t max_lag);

// Histogram counts with one shared set of uniform bin edges spanning the
// pooled range of all series: series_id,bin_left,bin_right,count.
void write_hist_csv(const std::filesystem::path& path, std::span<const double> source,
                    const std::vector<std::vector<double>>& surrogates, int bins);

// One aggregate row per m: the batch stats and distances as avg/sd pairs.
void write_msweep_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<int, ComparisonReport>>& rows);
void write_msweep_md(const std::filesystem::path& path,
                     const std::vector<std::pair<int, ComparisonReport>>& rows);

}  // namespace surrogen::io
