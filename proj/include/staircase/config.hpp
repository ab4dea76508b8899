#pragma once

#include "staircase/code.hpp"
#include "staircase/sim.hpp"

#include <cstdint>
#include <string>

namespace staircase {

// Parsed experiment description.
//
//   [code]   S, M, r (optional, must match the derivation), ruler
//            ("optimal" or explicit marks "0,1,4,6"), perm_family
//            ("involution" | "shift")
//   [frame]  F, W, iterations
//   [sweep]  gap_db = ... | p = ... (exactly one), max_frames, max_bits,
//            min_bit_errors, base_seed, mode ("random" | "zero")
//   [io]     csv, manifest (default output paths)
//
// '#' and ';' start comments. Unknown sections or keys are rejected.
struct Config {
    CodeParams code;
    bool has_sweep = false;
    SweepSpec sweep; // points carry gap_db or p as given; resolve_points()
                     // derives the other against the code's block rate
    std::string io_csv;
    std::string io_manifest;
};

Config parse_config_text(const std::string& text, const std::string& origin = "<config>");
Config parse_config_file(const std::string& path);

// Canonical one-line-per-field rendering of the resolved configuration; the
// manifest embeds it and its FNV-1a hash identifies the parameter set.
std::string canonical_config(const Config& cfg);
uint64_t config_hash(const Config& cfg);

// JSON manifest (resolved config + seed + parameter hash).
std::string manifest_json(const Config& cfg);

} // namespace staircase
