#pragma once

#include "staircase/code.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace staircase {

struct StopRules {
    uint64_t max_frames = 0;      // 0 = unlimited
    uint64_t max_bits = 10'000'000'000ull; // info bits; 0 = unlimited
    uint64_t min_bit_errors = 100;         // stop once reached; 0 = disabled
};

enum class InfoMode {
    Random, // random information bits through the full encode path
    Zero,   // all-zero codeword fast path (linearity-equivalent)
};

struct SweepSpec {
    std::vector<double> gaps_db;    // per point, resolved
    std::vector<double> crossovers; // per point, resolved
    StopRules stop;
    uint64_t base_seed = 1;
    InfoMode mode = InfoMode::Random;

    // Test hook: per-frame scripted channel (transmitted-bit flip indices,
    // frame f uses entry f % size). Bypasses random noise when non-empty.
    std::vector<std::vector<int64_t>> scripted_noise;
};

struct PointResult {
    double rate = 0, gap_db = 0, crossover_p = 0;
    uint64_t info_bits = 0, bit_errors = 0, frames = 0, frame_errors = 0;
    double ber = 0, ci_low = 0, ci_high = 0;
    double seconds = 0, bits_per_sec = 0;
    std::string error; // non-empty if the point failed to run
};

struct SimResult {
    std::vector<PointResult> points;
};

// Builds the resolved point list from one of (gaps, crossovers); the other is
// derived through the channel-math module.
void resolve_points(double rate, std::vector<double>& gaps_db, std::vector<double>& crossovers);

// Monte-Carlo BER at one channel point. Deterministic for a fixed
// (base_seed, point_index) regardless of thread count: frame outcomes are
// aggregated in frame order and stop rules evaluated on that prefix.
PointResult run_point(const Code& code, const SweepSpec& spec, int point_index, int threads);

SimResult run_sweep(const Code& code, const SweepSpec& spec, int threads);

// CSV with a fixed header; floats in shortest round-trip form. zero_timing
// blanks the wall-time columns so reruns are byte-identical.
std::string to_csv(const Code& code, const SimResult& result, bool zero_timing = false);

} // namespace staircase
