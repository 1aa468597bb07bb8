#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "surrogen/baselines.hpp"
#include "surrogen/error.hpp"
#include "surrogen/generator.hpp"
#include "surrogen/io/csv.hpp"
#include "surrogen/io/manifest.hpp"
#include "surrogen/io/report.hpp"
#include "surrogen/metrics.hpp"
#include "surrogen/rng.hpp"
#include "surrogen/version.hpp"

namespace fs = std::filesystem;

namespace {

struct InputArgs {
    std::string input;
    std::string column = "0";
    std::string missing = "error";
};

struct GenerateArgs {
    InputArgs in;
    int m = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string repair = "none";
    int max_repair_iters = 1000;
    std::string out;
    std::string format = "long";
    int threads = 1;
};

struct ReportArgs {
    InputArgs in;
    std::string surrogates;
    std::size_t max_lag = 10;
    int bins = 30;
    std::string out;
    std::vector<std::string> emit;
};

struct MsweepArgs {
    InputArgs in;
    std::vector<int> m_values;
    int count = 100;
    std::uint64_t seed = 0;
    std::string out;
    int threads = 1;
};

struct BaselineArgs {
    InputArgs in;
    int ar_order = 1;
    int count = 100;
    std::uint64_t seed = 0;
    std::string out;
};

std::string fmt(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

surrogen::io::MissingPolicy missing_policy(const std::string& name) {
    return name == "interpolate" ? surrogen::io::MissingPolicy::Interpolate
                                 : surrogen::io::MissingPolicy::Error;
}

surrogen::RepairMode repair_mode(const std::string& name) {
    if (name == "resample") return surrogen::RepairMode::Resample;
    if (name == "clamp") return surrogen::RepairMode::Clamp;
    return surrogen::RepairMode::None;
}

void add_input_flags(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("--input", args.input, "Input CSV file")->required();
    cmd->add_option("--column", args.column,
                    "Column to read: header name or 0-based index");
    cmd->add_option("--missing", args.missing, "Missing-cell policy")
        ->check(CLI::IsMember({"error", "interpolate"}));
}

surrogen::TimeSeries load_input(const InputArgs& args) {
    return surrogen::io::read_series_csv(args.input, args.column,
                                         missing_policy(args.missing));
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

surrogen::io::RunManifest base_manifest(const std::string& command,
                                        const InputArgs& in) {
    surrogen::io::RunManifest m;
    m.command = command;
    m.source = in.input;
    m.input_fnv1a64 = surrogen::io::fnv1a64_file(in.input);
    m.version = surrogen::kVersion;
    m.created_utc = surrogen::io::current_utc_timestamp();
    m.extra.emplace_back("column", in.column);
    m.extra.emplace_back("missing", in.missing);
    return m;
}

int run_generate(const GenerateArgs& args) {
    const surrogen::TimeSeries source = load_input(args.in);

    surrogen::GeneratorConfig config;
    config.m = args.m;
    config.repair_mode = repair_mode(args.repair);
    config.max_repair_iterations = args.max_repair_iters;
    config.seed = args.seed;
    config.count = args.count;

    const surrogen::SurrogateBatch batch =
        surrogen::generate_batch(source, config, args.threads);

    const fs::path dir = prepare_out_dir(args.out);
    surrogen::io::write_surrogates_csv(dir / "surrogates.csv", batch,
                                       args.format == "wide"
                                           ? surrogen::io::BatchFormat::Wide
                                           : surrogen::io::BatchFormat::Long);

    surrogen::io::RunManifest manifest = base_manifest("generate", args.in);
    manifest.m = config.m;
    manifest.repair = args.repair;
    manifest.seed = config.seed;
    manifest.count = config.count;
    manifest.extra.emplace_back("format", args.format);
    manifest.extra.emplace_back("max_repair_iterations",
                                std::to_string(config.max_repair_iterations));
    surrogen::io::write_manifest(dir / "manifest.txt", manifest);
    return 0;
}

int run_report(const ReportArgs& args) {
    const surrogen::TimeSeries source = load_input(args.in);

    fs::path surrogates_path(args.surrogates);
    if (fs::is_directory(surrogates_path)) surrogates_path /= "surrogates.csv";
    const std::vector<std::vector<double>> raw =
        surrogen::io::read_surrogates_csv(surrogates_path);

    surrogen::SurrogateBatch batch;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != source.size()) {
            throw surrogen::Error(
                surrogen::ErrorCode::LengthMismatch,
                "surrogate " + std::to_string(i) + " has length " +
                    std::to_string(raw[i].size()) + ", source has " +
                    std::to_string(source.size()));
        }
        batch.surrogates.emplace_back(raw[i]);
    }
    batch.repair_iterations.assign(batch.surrogates.size(), 0);

    const surrogen::ComparisonReport report =
        surrogen::batch_metrics(batch, source);

    const fs::path dir = prepare_out_dir(args.out);
    auto wants = [&](const std::string& name) {
        return std::find(args.emit.begin(), args.emit.end(), name) != args.emit.end();
    };
    if (wants("table.csv")) surrogen::io::write_report_csv(dir / "table.csv", report);
    if (wants("table.md")) surrogen::io::write_report_md(dir / "table.md", report);
    if (wants("acf.csv")) {
        surrogen::io::write_acf_csv(dir / "acf.csv", source, raw, args.max_lag);
    }
    if (wants("hist.csv")) {
        surrogen::io::write_hist_csv(dir / "hist.csv", source, raw, args.bins);
    }

    surrogen::io::RunManifest manifest = base_manifest("report", args.in);
    manifest.count = static_cast<int>(batch.surrogates.size());
    manifest.extra.emplace_back("surrogates", surrogates_path.string());
    manifest.extra.emplace_back("max_lag", std::to_string(args.max_lag));
    manifest.extra.emplace_back("bins", std::to_string(args.bins));
    surrogen::io::write_manifest(dir / "manifest.txt", manifest);
    return 0;
}

int run_msweep(const MsweepArgs& args) {
    const surrogen::TimeSeries source = load_input(args.in);

    std::vector<std::pair<int, surrogen::ComparisonReport>> rows;
    rows.reserve(args.m_values.size());
    for (int m : args.m_values) {
        surrogen::GeneratorConfig config;
        config.m = m;
        config.seed = args.seed;
        config.count = args.count;
        const surrogen::SurrogateBatch batch =
            surrogen::generate_batch(source, config, args.threads);
        rows.emplace_back(m, surrogen::batch_metrics(batch, source));
    }

    const fs::path dir = prepare_out_dir(args.out);
    surrogen::io::write_msweep_csv(dir / "msweep.csv", rows);
    surrogen::io::write_msweep_md(dir / "msweep.md", rows);

    surrogen::io::RunManifest manifest = base_manifest("msweep", args.in);
    manifest.seed = args.seed;
    manifest.count = args.count;
    std::string joined;
    for (int m : args.m_values) {
        if (!joined.empty()) joined += ',';
        joined += std::to_string(m);
    }
    manifest.extra.emplace_back("m_values", joined);
    surrogen::io::write_manifest(dir / "manifest.txt", manifest);
    return 0;
}

int run_baseline(const BaselineArgs& args) {
    const surrogen::TimeSeries source = load_input(args.in);
    const surrogen::ArmaModel model =
        surrogen::fit_ar_yule_walker(source, args.ar_order);

    surrogen::SurrogateBatch batch;
    batch.config.seed = args.seed;
    batch.config.count = args.count;
    for (int i = 0; i < args.count; ++i) {
        surrogen::RandomStream rng =
            surrogen::RandomStream::for_index(args.seed, static_cast<std::uint64_t>(i));
        batch.surrogates.push_back(
            surrogen::arma_generate(model, source.size(), rng));
    }
    batch.repair_iterations.assign(batch.surrogates.size(), 0);

    const surrogen::ComparisonReport report =
        surrogen::batch_metrics(batch, source);

    std::string note = "AR(" + std::to_string(args.ar_order) + ") (Yule–Walker):";
    for (std::size_t i = 0; i < model.phi.size(); ++i) {
        note += " phi_" + std::to_string(i + 1) + " = " +
                fmt(model.phi[i]) + ",";
    }
    note += " c = " + fmt(model.c) +
            ", sigma = " + fmt(model.sigma);

    const fs::path dir = prepare_out_dir(args.out);
    surrogen::io::write_surrogates_csv(dir / "surrogates.csv", batch,
                                       surrogen::io::BatchFormat::Long);
    surrogen::io::write_report_csv(dir / "table.csv", report);
    surrogen::io::write_report_md(dir / "table.md", report, note);

    std::vector<std::vector<double>> raw;
    raw.reserve(batch.surrogates.size());
    for (const auto& s : batch.surrogates) raw.push_back(s.values());
    surrogen::io::write_acf_csv(dir / "acf.csv", source, raw,
                                std::min<std::size_t>(10, source.size() - 1));
    surrogen::io::write_hist_csv(dir / "hist.csv", source, raw, 30);

    surrogen::io::RunManifest manifest = base_manifest("baseline", args.in);
    manifest.seed = args.seed;
    manifest.count = args.count;
    manifest.extra.emplace_back("ar_order", std::to_string(args.ar_order));
    for (std::size_t i = 0; i < model.phi.size(); ++i) {
        manifest.extra.emplace_back("phi_" + std::to_string(i + 1),
                                    fmt(model.phi[i]));
    }
    manifest.extra.emplace_back("fit_c", fmt(model.c));
    manifest.extra.emplace_back("fit_sigma",
                                fmt(model.sigma));
    surrogen::io::write_manifest(dir / "manifest.txt", manifest);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Surrogate time series generation and evaluation"};
    app.set_version_flag("--version", std::string(surrogen::kVersion));
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* gen_cmd =
        app.add_subcommand("generate", "Generate a batch of surrogates");
    add_input_flags(gen_cmd, gen.in);
    gen_cmd->add_option("--m", gen.m, "Number of preserved phases beyond DC")
        ->required();
    gen_cmd->add_option("--count", gen.count, "Surrogates to generate");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--repair", gen.repair, "Non-negativity repair mode")
        ->check(CLI::IsMember({"none", "resample", "clamp"}));
    gen_cmd->add_option("--max-repair-iters", gen.max_repair_iters,
                        "Resample-repair iteration cap");
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();
    gen_cmd->add_option("--format", gen.format, "Surrogate CSV layout")
        ->check(CLI::IsMember({"long", "wide"}));
    gen_cmd->add_option("--threads", gen.threads, "Worker threads");

    ReportArgs rep;
    CLI::App* rep_cmd = app.add_subcommand(
        "report", "Compare a surrogate batch against its source");
    add_input_flags(rep_cmd, rep.in);
    rep_cmd->add_option("--surrogates", rep.surrogates,
                        "Surrogate CSV file or a directory containing surrogates.csv")
        ->required();
    rep_cmd->add_option("--max-lag", rep.max_lag, "ACF depth");
    rep_cmd->add_option("--bins", rep.bins, "Histogram bins");
    rep_cmd->add_option("--out", rep.out, "Output directory")->required();
    rep_cmd
        ->add_option("--emit", rep.emit, "Artifacts to write")
        ->check(CLI::IsMember({"table.csv", "table.md", "acf.csv", "hist.csv"}))
        ->delimiter(',');

    MsweepArgs msw;
    CLI::App* msw_cmd = app.add_subcommand(
        "msweep", "Batch statistics across several m values");
    add_input_flags(msw_cmd, msw.in);
    msw_cmd->add_option("--m-values", msw.m_values, "Comma-separated m values")
        ->required()
        ->delimiter(',');
    msw_cmd->add_option("--count", msw.count, "Surrogates per m");
    msw_cmd->add_option("--seed", msw.seed, "Random seed");
    msw_cmd->add_option("--out", msw.out, "Output directory")->required();
    msw_cmd->add_option("--threads", msw.threads, "Worker threads");

    BaselineArgs base;
    CLI::App* base_cmd = app.add_subcommand(
        "baseline", "AR(p) baseline batch fitted by Yule-Walker");
    add_input_flags(base_cmd, base.in);
    base_cmd->add_option("--ar-order", base.ar_order, "AR order p")->required();
    base_cmd->add_option("--count", base.count, "Series to generate");
    base_cmd->add_option("--seed", base.seed, "Random seed");
    base_cmd->add_option("--out", base.out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen_cmd->parsed()) return run_generate(gen);
        if (rep_cmd->parsed()) {
            if (rep.emit.empty()) {
                rep.emit = {"table.csv", "table.md", "acf.csv", "hist.csv"};
            }
            return run_report(rep);
        }
        if (msw_cmd->parsed()) return run_msweep(msw);
        if (base_cmd->parsed()) return run_baseline(base);
    } catch (const surrogen::Error& e) {
        std::cerr << "error [" << surrogen::error_name(e.code()) << "]: " << e.what()
                  << '\n';
        return e.code() == surrogen::ErrorCode::RepairDidNotConverge ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
