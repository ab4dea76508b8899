#pragma once

#include "staircase/code.hpp"

#include <cstdint>
#include <string>

namespace staircase {

// Framed stream file format (output of `encode`, input of `decode`):
// all frames' transmitted bits packed contiguously, most-significant-bit
// first within bytes, zero-padded to a byte boundary, followed by a 16-byte
// trailer: magic "SCW1", u64-le frame count, u32-le info pad bit count
// (zero-fill added to the last frame's information bits).
struct StreamTrailer {
    static constexpr char kMagic[4] = {'S', 'C', 'W', '1'};
    uint64_t frames = 0;
    uint32_t pad_bits = 0;
};

struct DecodeFileResult {
    uint64_t frames = 0;
    int64_t residual_constraints = 0; // detected-uncorrectable leftovers
    int64_t flips = 0;
};

// Encodes a raw binary file into the framed stream format.
void encode_file(const Code& code, const std::string& in_path, const std::string& out_path);

// Decodes a framed stream back to the original bytes. Throws on malformed or
// truncated input; decoding failures are reported, not thrown.
DecodeFileResult decode_file(const Code& code, const std::string& in_path,
                             const std::string& out_path);

} // namespace staircase
