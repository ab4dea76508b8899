#pragma once

#include "staircase/bitmat.hpp"
#include "staircase/code.hpp"
#include "staircase/encoder.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace staircase {

struct DecodeStats {
    int64_t flips = 0;               // component corrections applied
    int64_t detected = 0;            // detected-uncorrectable decisions (incl. pinned)
    int64_t pinned_suppressed = 0;   // corrections vetoed by known-zero regions
    int64_t iterations = 0;          // iterate passes actually run
    int64_t residual_constraints = 0;// constraints left with a nonzero syndrome
};

// One applied correction, recorded in trace mode.
struct FlipEvent {
    int64_t constraint;
    int32_t row;
    int32_t pos;
    BitCoord bit;
    bool introduced_error;    // the flipped bit matched the reference before
    int32_t row_errors_before; // reference mismatches on that codeword row
};

// Outcome of a sparse all-zero-frame decode (zero-codeword simulation path).
struct SparseDecodeResult {
    bool clean = false;              // frame returned to the zero codeword
    int64_t info_bit_errors = 0;     // residual errors in emitted info bits
    int64_t residual_set_bits = 0;   // residual errors anywhere in the frame
    int64_t residual_syndromes = 0;
    DecodeStats stats;
};

// Sliding-window syndrome-domain iterative decoder for one frame.
//
// Holds the full frame plus one r-bit syndrome per (constraint, row). At
// window position ws the tracked constraints are [ws+d_M, ws+W-1], clamped
// to the constraints that exist; they are visited in ascending constraint
// order, rows ascending, corrections applied immediately. The leading edge
// grows out of the virtual-zero history one block per position and drains
// past the frame end the same way, so every constraint gets W-d_M decoding
// opportunities; decoding a full window of raw noise at once would seed
// miscorrection avalanches. Blocks left of the window are never touched
// because only fully-interior constraints are tracked.
class FrameDecoder {
  public:
    explicit FrameDecoder(const Code& code);

    // Received frame storage; fill via frame() then call init_syndromes().
    BlockRun& frame() { return frame_; }
    const BlockRun& frame() const { return frame_; }

    void init_syndromes();

    // Runs the sliding window over the whole frame. Emitted bits are final:
    // no tracked constraint can reach a block once the window has passed it.
    DecodeStats decode();

    // Info bits of the corrected frame, packed little-endian in the serial
    // order of FrameLayout::info_coord. out must hold info_bits() bits.
    void extract_info(uint64_t* out_words) const;

    // Zero-codeword fast path: assumes the frame and all syndromes are
    // currently zero (first call after construction or reset_zero()), applies
    // the given channel flips by transmitted-bit index, decodes, and restores
    // the zero state. Cost scales with the error pattern, not the frame.
    SparseDecodeResult decode_sparse(std::span<const int64_t> flip_tindices);

    void reset_zero();

    // Recomputed-from-scratch syndrome of one constraint row; test oracle for
    // the incrementally maintained bank.
    uint32_t recompute_syndrome(int64_t m, int row) const;
    uint32_t stored_syndrome(int64_t m, int row) const {
        return synd_[size_t(m - first_) * S_ + row];
    }

    // Trace mode: record every applied flip, classified against a reference
    // frame (nullptr = the all-zero codeword). Test use only.
    void set_trace(bool on, const BlockRun* reference = nullptr) {
        trace_ = on;
        reference_ = reference;
        events_.clear();
    }
    const std::vector<FlipEvent>& trace_events() const { return events_; }

    const FrameLayout& layout() const { return layout_; }

  private:
    void apply_flip(int64_t c, int x, int y);
    int64_t iterate(int64_t lo, int64_t hi);
    void note_event(int64_t m, int i, int pos, int64_t c, int x, int y);

    const Code& code_;
    FrameLayout layout_;
    int S_, M_, r_;
    int64_t first_, F_, W_, term_start_, end_;
    const uint32_t* col_;
    const int32_t* label2pos_;
    uint32_t label_mask_, overall_mask_;
    std::vector<const uint32_t*> fwd_, inv_;
    std::vector<int> marks_;

    BlockRun frame_;
    std::vector<uint32_t> synd_;   // (m - d_M) * S + row
    std::vector<int32_t> nzrows_;  // per constraint, count of nonzero rows
    int64_t global_nz_ = 0;
    int64_t nz_lo_ = 0, nz_hi_ = -1;

    bool journal_ = false;
    std::vector<size_t> touched_synd_;
    std::vector<uint64_t> touched_bits_;

    bool trace_ = false;
    const BlockRun* reference_ = nullptr;
    std::vector<FlipEvent> events_;
    DecodeStats stats_;
};

} // namespace staircase
