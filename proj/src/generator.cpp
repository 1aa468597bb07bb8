#include "surrogen/generator.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "surrogen/dft.hpp"
#include "surrogen/error.hpp"

namespace surrogen {
namespace {

void check_m(int m, std::size_t n) {
    if (m <= 0 || static_cast<std::size_t>(m) > n / 2) {
        throw Error(ErrorCode::MOutOfRange,
                    "m must satisfy 0 < m <= N/2; got m=" + std::to_string(m) +
                        " for N=" + std::to_string(n));
    }
}

bool has_negative(const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return x < 0.0; });
}

std::size_t count_negative(const std::vector<double>& v) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](double x) { return x < 0.0; }));
}

}  // namespace

void GeneratorConfig::validate() const {
    if (m <= 0) {
        throw Error(ErrorCode::MOutOfRange,
                    "m must be positive, got " + std::to_string(m));
    }
    if (count < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "count must be >= 1, got " + std::to_string(count));
    }
    if (max_repair_iterations < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "max_repair_iterations must be >= 1, got " +
                        std::to_string(max_repair_iterations));
    }
}

Spectrum randomize_phases(const Spectrum& z, int m, RandomStream& rng) {
    if (!z.is_real_symmetric()) {
        throw Error(ErrorCode::NotRealSymmetric,
                    "randomize_phases needs a real-symmetric spectrum");
    }
    const std::size_t n = z.size();
    check_m(m, n);

    std::vector<double> rho = z.amplitudes();
    std::vector<double> theta = z.phases();

    // Free block: everything past the preserved phases 0..m, up to (but not
    // including) the Nyquist term. Drawn in ascending frequency order.
    const std::size_t lower_end = (n + 1) / 2;  // one past the last free index
    for (std::size_t w = static_cast<std::size_t>(m) + 1; w < lower_end; ++w) {
        theta[w] = rng.next_phase();
    }

    // Nyquist (even n only) is real, so its phase is a sign: preserved when
    // m = N/2, otherwise drawn from {0, pi} after the free block.
    if (n % 2 == 0 && static_cast<std::size_t>(m) < n / 2) {
        theta[n / 2] = rng.next_bit() ? std::numbers::pi : 0.0;
    }

    // Rebuild the upper half from the lower so the result is exactly
    // conjugate-symmetric whatever the input's roundoff state was.
    for (std::size_t w = 1; w < lower_end; ++w) {
        theta[n - w] = Spectrum::canonicalize_phase(-theta[w]);
    }

    return Spectrum(std::move(rho), std::move(theta), /*real_symmetric=*/true);
}

TimeSeries generate_one(const TimeSeries& s, int m, RandomStream& rng) {
    const Spectrum z = forward_dft(s);
    const TimeSeries out = inverse_dft(randomize_phases(z, m, rng));
    return TimeSeries(out.values(), s.units());
}

std::pair<TimeSeries, int> generate_nonneg(const TimeSeries& s, int m,
                                           RepairMode mode, int max_iters,
                                           RandomStream& rng) {
    if (mode == RepairMode::None) {
        throw Error(ErrorCode::InvalidArgument,
                    "generate_nonneg needs repair mode resample or clamp");
    }
    if (max_iters < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
    }
    if (std::all_of(s.values().begin(), s.values().end(),
                    [](double x) { return x < 0.0; })) {
        throw Error(ErrorCode::AllNegative,
                    "input has no non-negative value to anchor repair");
    }

    std::vector<double> current = generate_one(s, m, rng).values();

    if (mode == RepairMode::Clamp) {
        for (double& x : current) x = std::max(x, 0.0);
        return {TimeSeries(std::move(current), s.units()), 1};
    }

    // Resample: draw a fresh surrogate FROM the current one and swap in its
    // values at exactly the still-negative positions, repeating until clean.
    int iterations = 0;
    while (has_negative(current) && iterations < max_iters) {
        ++iterations;
        const TimeSeries replacement =
            generate_one(TimeSeries(current, s.units()), m, rng);
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (current[k] < 0.0) current[k] = replacement[k];
        }
    }
    if (has_negative(current)) {
        const std::size_t remaining = count_negative(current);
        throw Error(ErrorCode::RepairDidNotConverge,
                    "resample repair left " + std::to_string(remaining) +
                        " negative values after " + std::to_string(max_iters) +
                        " iterations",
                    remaining);
    }
    return {TimeSeries(std::move(current), s.units()), iterations};
}

SurrogateBatch generate_batch(const TimeSeries& s, const GeneratorConfig& config,
                              int threads) {
    config.validate();
    check_m(config.m, s.size());
    if (threads < 1) {
        throw Error(ErrorCode::InvalidArgument,
                    "threads must be >= 1, got " + std::to_string(threads));
    }

    const std::size_t count = static_cast<std::size_t>(config.count);
    std::vector<std::optional<TimeSeries>> slots(count);
    std::vector<int> iterations(count, 0);

    auto make_one = [&](std::size_t i) {
        RandomStream rng = RandomStream::for_index(config.seed, i);
        if (config.repair_mode == RepairMode::None) {
            slots[i] = generate_one(s, config.m, rng);
        } else {
            auto [series, iters] =
                generate_nonneg(s, config.m, config.repair_mode,
                                config.max_repair_iterations, rng);
            slots[i] = std::move(series);
            iterations[i] = iters;
        }
    };

    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) make_one(i);
    } else {
        // Per-index seeding makes the partitioning irrelevant to the output;
        // the first failing index wins so errors are deterministic too.
        std::mutex error_mutex;
        std::size_t error_index = count;
        std::exception_ptr error;
        auto worker = [&](std::size_t start) {
            for (std::size_t i = start; i < count; i += workers) {
                try {
                    make_one(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (i < error_index) {
                        error_index = i;
                        error = std::current_exception();
                    }
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker, t);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    SurrogateBatch batch;
    batch.config = config;
    batch.surrogates.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        batch.surrogates.push_back(std::move(*slots[i]));
    batch.repair_iterations = std::move(iterations);
    return batch;
}

}  // namespace surrogen
