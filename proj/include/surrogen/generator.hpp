#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "surrogen/rng.hpp"
#include "surrogen/spectrum.hpp"
#include "surrogen/time_series.hpp"

namespace surrogen {

enum class RepairMode { None, Resample, Clamp };

struct GeneratorConfig {
    int m = 1;                        // phases kept beyond DC; 0 < m <= N/2
    RepairMode repair_mode = RepairMode::None;
    int max_repair_iterations = 1000;
    std::uint64_t seed = 0;
    int count = 1;                    // surrogates per batch

    // Checks the series-independent invariants (m > 0, count >= 1,
    // max_repair_iterations >= 1); the m <= N/2 bound is checked against
    // the actual series inside the generating calls.
    void validate() const;
};

struct SurrogateBatch {
    std::vector<TimeSeries> surrogates;
    GeneratorConfig config;
    std::vector<int> repair_iterations;  // per surrogate; 0 when untouched
};

// Phase randomization with similarity control. Amplitudes are copied
// unchanged. Phases 0..m are preserved; for even N phases m+1..N/2-1 and
// for odd N phases m+1..(N-1)/2 are drawn uniformly on (-pi, pi]; the
// upper half mirrors the lower so the result stays real-symmetric.
// Even-N Nyquist sign: preserved when m = N/2, otherwise drawn at random
// from {0, pi}. Draw order: ascending free phases, then the Nyquist sign.
Spectrum randomize_phases(const Spectrum& z, int m, RandomStream& rng);

// One surrogate: inverse_dft(randomize_phases(forward_dft(s), m, rng)).
// Mean, SD and circular autocorrelation match the source to roundoff;
// a constant series comes back unchanged (all energy sits in DC).
TimeSeries generate_one(const TimeSeries& s, int m, RandomStream& rng);

// Non-negative surrogate generation for series that live near zero.
// Resample: repeatedly generate a fresh surrogate FROM THE CURRENT one and
// replace exactly the negative positions, until none remain or max_iters
// repair rounds have run (then RepairDidNotConverge, carrying the count of
// negatives left). Clamp: one pass setting negatives to zero; the reported
// iteration count is 1. Neither mode preserves mean or SD.
// Requires at least one non-negative value in s (AllNegative otherwise).
std::pair<TimeSeries, int> generate_nonneg(const TimeSeries& s, int m,
                                           RepairMode mode, int max_iters,
                                           RandomStream& rng);

// A batch of config.count surrogates. Surrogate i uses
// RandomStream::for_index(config.seed, i), so the batch is bit-identical
// for any thread count and any execution order.
SurrogateBatch generate_batch(const TimeSeries& s, const GeneratorConfig& config,
                              int threads = 1);

}  // namespace surrogen
