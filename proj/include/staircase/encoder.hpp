#pragma once

#include "staircase/bitmat.hpp"
#include "staircase/code.hpp"

#include <cstdint>

namespace staircase {

// Frame structure of a terminated code: F blocks, the first F-W carrying
// information plus parity, the last W parity-only with a known-zero
// information region. Virtual all-zero blocks occupy indices [0, d_M).
class FrameLayout {
  public:
    explicit FrameLayout(const Code& code)
        : S_(code.S()), r_(code.r()), dM_(code.d_max()), F_(code.F()), W_(code.W()) {}

    int64_t first_block() const { return dM_; }       // absolute index of block 0 of the frame
    int64_t term_start() const { return dM_ + F_ - W_; }
    int64_t end_block() const { return dM_ + F_; }
    int64_t full_blocks() const { return F_ - W_; }

    int64_t info_bits() const { return int64_t(S_) * (S_ - r_) * (F_ - W_); }
    int64_t transmitted_bits() const {
        return int64_t(S_) * (int64_t(S_) * (F_ - W_) + W_ * r_);
    }

    // Serial order of transmitted bits: full blocks first, column-major over
    // all S columns; then terminated blocks, column-major over the r parity
    // columns. Returned block index is absolute (first frame block = d_M).
    BitCoord transmitted_coord(int64_t t) const {
        int64_t full = int64_t(S_) * S_;
        if (t < full_blocks() * full) {
            int64_t b = t / full, u = t % full;
            return {dM_ + b, int32_t(u % S_), int32_t(u / S_)};
        }
        int64_t v = t - full_blocks() * full;
        int64_t per = int64_t(S_) * r_;
        int64_t b = full_blocks() + v / per, w = v % per;
        return {dM_ + b, int32_t(w % S_), int32_t(S_ - r_ + w / S_)};
    }

    // Serial order of information bits: full blocks, column-major over the
    // S-r information columns.
    BitCoord info_coord(int64_t idx) const {
        int64_t per = int64_t(S_) * (S_ - r_);
        int64_t b = idx / per, u = idx % per;
        return {dM_ + b, int32_t(u % S_), int32_t(u / S_)};
    }

    // Known-zero positions the decoder must never flip: virtual blocks and
    // the information region of terminated blocks.
    bool is_pinned(int64_t block, int col) const {
        return block < dM_ || (block >= term_start() && col < S_ - r_);
    }

  private:
    int S_, r_;
    int64_t dM_, F_, W_;
};

// Recursive block-at-a-time encoder; keeps the d_M most recent blocks.
// Blocks before the stream start are all-zero.
class BlockEncoder {
  public:
    explicit BlockEncoder(const Code& code);

    // Info region as an S x (S-r) byte matrix (row-major, one byte per bit);
    // nullptr encodes a zero information block (termination). Returns the
    // completed S x S block and advances the state.
    BitMatrix encode_block(const uint8_t* info);

    int64_t next_index() const { return next_; }
    void reset();

  private:
    const Code& code_;
    std::vector<BitMatrix> ring_; // d_M most recent blocks, slot c % d_M
    int64_t next_;
};

// Whole-frame encoder writing into a BlockRun of F blocks starting at d_M.
// info_words: layout.info_bits() bits packed little-endian (bit t of the
// stream = bit t%64 of word t/64), serial order per FrameLayout::info_coord.
class FrameEncoder {
  public:
    explicit FrameEncoder(const Code& code) : code_(code), layout_(code) {}

    const FrameLayout& layout() const { return layout_; }

    // `out` must have first() == d_M and count() == F; it is cleared first.
    void encode_frame(const uint64_t* info_words, BlockRun& out) const;

  private:
    const Code& code_;
    FrameLayout layout_;
};

} // namespace staircase
