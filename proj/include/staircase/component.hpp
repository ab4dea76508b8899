#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace staircase {

// Decode decision for one component codeword, derived from its syndrome.
struct DecodeAction {
    enum Kind : uint8_t { NoError, FlipAt, DetectedUncorrectable };
    Kind kind = NoError;
    int32_t pos = -1; // valid iff kind == FlipAt, in [0, n)
};

// Shortened extended Hamming code of length n = (M+1)S with r parity bits,
// r = ceil(log2((M+1)S)) + 1, obtained from a parent extended Hamming code of
// length 2^(r-1). Single-error-correcting, double-error-detecting (d_min = 4).
//
// Column scheme: parent position labels are the (r-1)-bit values; column(p) =
// label(p) with the overall-parity bit (bit r-1) always set. The r parity
// positions are the last r codeword positions carrying labels 2^0 .. 2^(r-2)
// followed by label 0; data positions 0..n-r-1 carry the smallest remaining
// labels in increasing order. Shortening drops the largest non-pivot labels.
class ComponentCode {
  public:
    ComponentCode(int S, int M);

    int n() const { return n_; }
    int r() const { return r_; }
    int data_bits() const { return n_ - r_; }
    int parent_len() const { return 1 << (r_ - 1); }
    int shorten() const { return parent_len() - n_; }

    // r-bit parity-check column of position p; bit r-1 (overall parity) is 1.
    uint32_t column(int32_t p) const;

    const uint32_t* column_table() const { return col_.data(); }

    // XOR of column(p) over set positions of a full-length word.
    uint32_t syndrome(std::span<const uint8_t> word) const;

    // Parity bits (length r) completing `info` (length n-r) to a codeword.
    std::vector<uint8_t> encode_parity(std::span<const uint8_t> info) const;

    // Parity bits as a packed word, low bit = first parity position, given the
    // syndrome of the data portion alone. Used by the row encoder hot path.
    uint32_t parity_word_for(uint32_t data_syndrome) const {
        uint32_t label = data_syndrome & label_mask_;
        uint32_t overall = data_syndrome >> (r_ - 1);
        uint32_t fix = (overall ^ uint32_t(std::popcount(label))) & 1u;
        return label | (fix << (r_ - 1));
    }

    // Syndrome-domain bounded-distance decision: zero -> NoError; odd overall
    // parity with a valid column match -> FlipAt; anything else -> detected.
    DecodeAction decide(uint32_t syndrome) const {
        if (syndrome == 0)
            return {DecodeAction::NoError, -1};
        if (syndrome >> (r_ - 1)) {
            int32_t p = label_to_pos_[syndrome & label_mask_];
            if (p >= 0)
                return {DecodeAction::FlipAt, p};
        }
        return {DecodeAction::DetectedUncorrectable, -1};
    }

    // Direct label -> position lookup (-1 when the label was shortened away).
    const int32_t* label_to_pos_table() const { return label_to_pos_.data(); }

    uint32_t overall_parity_mask() const { return 1u << (r_ - 1); }

  private:
    int n_;
    int r_;
    uint32_t label_mask_;
    std::vector<uint32_t> col_;        // position -> r-bit column
    std::vector<int32_t> label_to_pos_; // (r-1)-bit label -> position or -1
};

} // namespace staircase
