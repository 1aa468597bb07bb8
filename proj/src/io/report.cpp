#include "surrogen/io/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "io/format_util.hpp"
#include "surrogen/error.hpp"
#include "surrogen/stats.hpp"

namespace surrogen::io {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::FileNotFound, "cannot write " + path.string());
    }
    return out;
}

// Human-facing cell: 6 significant digits is plenty for a table meant to
// be read, and the CSV twin keeps the exact values.
std::string pretty(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// A spread below the display resolution of the average renders as exactly
// "± 0", the way a rounded table shows an invariant column.
std::string pm(const Aggregate& a) {
    const bool noise = std::abs(a.sd) < 5e-7 * (1.0 + std::abs(a.avg));
    return pretty(a.avg) + " ± " + pretty(noise ? 0.0 : a.sd);
}

std::string series_name(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%04zu", i);
    return buf;
}

struct Row {
    const char* metric;
    double source;
    bool has_source;
    Aggregate agg;
};

std::vector<Row> table_rows(const ComparisonReport& r) {
    return {
        {"Mean", r.source_stats.mean, true, r.surrogate_mean},
        {"SD", r.source_stats.sd, true, r.surrogate_sd},
        {"Skewness", r.source_stats.skewness, true, r.surrogate_skewness},
        {"Kurtosis", r.source_stats.kurtosis, true, r.surrogate_kurtosis},
        {"DTW", 0.0, false, r.dtw_distance},
        {"WD", 0.0, false, r.wasserstein_distance},
    };
}

}  // namespace

void write_report_csv(const std::filesystem::path& path, const ComparisonReport& report) {
    std::ofstream out = open_out(path);
    out << "metric,source,avg,sd\n";
    for (const Row& row : table_rows(report)) {
        out << row.metric << ',';
        if (row.has_source) out << format_double(row.source);
        out << ',' << format_double(row.agg.avg) << ',' << format_double(row.agg.sd)
            << '\n';
    }
}

void write_report_md(const std::filesystem::path& path, const ComparisonReport& report,
                     const std::string& note) {
    std::ofstream out = open_out(path);
    out << "| Metric | Source | Surrogates (n=" << report.count << ") |\n";
    out << "| --- | --- | --- |\n";
    for (const Row& row : table_rows(report)) {
        out << "| " << row.metric << " | "
            << (row.has_source ? pretty(row.source) : std::string("—")) << " | "
            << pm(row.agg) << " |\n";
    }
    if (!note.empty()) out << '\n' << note << '\n';
}

void write_acf_csv(const std::filesystem::path& path, std::span<const double> source,
                   const std::vector<std::vector<double>>& surrogates,
                   std::size_t max_lag) {
    std::ofstream out = open_out(path);
    out << "series_id,lag,acf,ci_low,ci_high\n";
    auto emit = [&](const std::string& id, std::span<const double> s) {
        const AcfResult res = acf(s, max_lag);
        for (std::size_t lag = 0; lag < res.r.size(); ++lag) {
            out << id << ',' << lag << ',' << format_double(res.r[lag]) << ','
                << format_double(-res.confidence_band) << ','
                << format_double(res.confidence_band) << '\n';
        }
    };
    emit("source", source);
    for (std::size_t i = 0; i < surrogates.size(); ++i)
        emit(series_name(i), surrogates[i]);
}

void write_hist_csv(const std::filesystem::path& path, std::span<const double> source,
                    const std::vector<std::vector<double>>& surrogates, int bins) {
    if (bins < 1) {
        throw Error(ErrorCode::InvalidArgument, "bins must be >= 1");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    auto widen = [&](std::span<const double> s) {
        for (double x : s) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    };
    widen(source);
    for (const auto& s : surrogates) widen(s);
    if (!(hi > lo)) {  // all values equal: give the single spike a unit-wide bin
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / bins;

    std::ofstream out = open_out(path);
    out << "series_id,bin_left,bin_right,count\n";
    auto emit = [&](const std::string& id, std::span<const double> s) {
        std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
        for (double x : s) {
            auto b = static_cast<std::ptrdiff_t>((x - lo) / width);
            b = std::clamp<std::ptrdiff_t>(b, 0, bins - 1);
            ++counts[static_cast<std::size_t>(b)];
        }
        for (int b = 0; b < bins; ++b) {
            out << id << ',' << format_double(lo + b * width) << ','
                << format_double(b + 1 == bins ? hi : lo + (b + 1) * width) << ','
                << counts[static_cast<std::size_t>(b)] << '\n';
        }
    };
    emit("source", source);
    for (std::size_t i = 0; i < surrogates.size(); ++i)
        emit(series_name(i), surrogates[i]);
}

namespace {

void write_msweep(const std::filesystem::path& path,
                  const std::vector<std::pair<int, ComparisonReport>>& rows,
                  bool markdown) {
    std::ofstream out = open_out(path);
    if (markdown) {
        out << "| m | Mean | SD | Skewness | Kurtosis | DTW | WD |\n";
        out << "| --- | --- | --- | --- | --- | --- | --- |\n";
        for (const auto& [m, r] : rows) {
            out << "| " << m << " | " << pm(r.surrogate_mean) << " | "
                << pm(r.surrogate_sd) << " | " << pm(r.surrogate_skewness) << " | "
                << pm(r.surrogate_kurtosis) << " | " << pm(r.dtw_distance) << " | "
                << pm(r.wasserstein_distance) << " |\n";
        }
        return;
    }
    out << "m,mean_avg,mean_sd,sd_avg,sd_sd,skewness_avg,skewness_sd,"
           "kurtosis_avg,kurtosis_sd,dtw_avg,dtw_sd,wd_avg,wd_sd\n";
    for (const auto& [m, r] : rows) {
        out << m << ',' << format_double(r.surrogate_mean.avg) << ','
            << format_double(r.surrogate_mean.sd) << ','
            << format_double(r.surrogate_sd.avg) << ','
            << format_double(r.surrogate_sd.sd) << ','
            << format_double(r.surrogate_skewness.avg) << ','
            << format_double(r.surrogate_skewness.sd) << ','
            << format_double(r.surrogate_kurtosis.avg) << ','
            << format_double(r.surrogate_kurtosis.sd) << ','
            << format_double(r.dtw_distance.avg) << ','
            << format_double(r.dtw_distance.sd) << ','
            << format_double(r.wasserstein_distance.avg) << ','
            << format_double(r.wasserstein_distance.sd) << '\n';
    }
}

}  // namespace

void write_msweep_csv(const std::filesystem::path& path,
                      const std::vector<std::pair<int, ComparisonReport>>& rows) {
    write_msweep(path, rows, /*markdown=*/false);
}

void write_msweep_md(const std::filesystem::path& path,
                     const std::vector<std::pair<int, ComparisonReport>>& rows) {
    write_msweep(path, rows, /*markdown=*/true);
}

}  // namespace surrogen::io
