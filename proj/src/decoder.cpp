#include "staircase/decoder.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace staircase {

FrameDecoder::FrameDecoder(const Code& code)
    : code_(code), layout_(code), S_(code.S()), M_(code.M()), r_(code.r()),
      first_(code.d_max()), F_(code.F()), W_(code.W()),
      term_start_(code.d_max() + code.F() - code.W()), end_(code.d_max() + code.F()),
      col_(code.component().column_table()),
      label2pos_(code.component().label_to_pos_table()),
      label_mask_((1u << (code.r() - 1)) - 1),
      overall_mask_(code.component().overall_parity_mask()),
      frame_(code.S(), code.d_max(), code.F()) {
    for (int k = 0; k <= M_; ++k) {
        fwd_.push_back(code.perms().fwd_table(k));
        inv_.push_back(code.perms().inv_table(k));
    }
    marks_ = code.marks();
    synd_.assign(size_t(F_) * S_, 0);
    nzrows_.assign(size_t(F_), 0);
    nz_lo_ = std::numeric_limits<int64_t>::max();
    nz_hi_ = -1;
}

void FrameDecoder::reset_zero() {
    frame_.clear();
    std::memset(synd_.data(), 0, synd_.size() * sizeof(uint32_t));
    std::memset(nzrows_.data(), 0, nzrows_.size() * sizeof(int32_t));
    global_nz_ = 0;
    nz_lo_ = std::numeric_limits<int64_t>::max();
    nz_hi_ = -1;
    touched_synd_.clear();
    touched_bits_.clear();
}

void FrameDecoder::init_syndromes() {
    std::memset(synd_.data(), 0, synd_.size() * sizeof(uint32_t));
    for (int64_t c = first_; c < end_; ++c) {
        for (int x = 0; x < S_; ++x) {
            const uint64_t* row = frame_.row(c, x);
            for (int wi = 0; wi < frame_.stride(); ++wi) {
                uint64_t w = row[wi];
                while (w) {
                    int y = (wi << 6) + std::countr_zero(w);
                    w &= w - 1;
                    uint32_t cell = uint32_t(x) * S_ + y;
                    for (int k = 0; k <= M_; ++k) {
                        int64_t m = c + marks_[k];
                        if (m >= end_)
                            break;
                        uint32_t ij = inv_[k][cell];
                        synd_[size_t(m - first_) * S_ + (ij / S_)] ^=
                            col_[uint32_t(M_ - k) * S_ + (ij % S_)];
                    }
                }
            }
        }
    }
    global_nz_ = 0;
    nz_lo_ = std::numeric_limits<int64_t>::max();
    nz_hi_ = -1;
    for (int64_t q = 0; q < F_; ++q) {
        int32_t nz = 0;
        const uint32_t* s = synd_.data() + size_t(q) * S_;
        for (int i = 0; i < S_; ++i)
            nz += s[i] != 0;
        nzrows_[q] = nz;
        if (nz) {
            global_nz_ += nz;
            nz_lo_ = std::min(nz_lo_, first_ + q);
            nz_hi_ = std::max(nz_hi_, first_ + q);
        }
    }
}

void FrameDecoder::apply_flip(int64_t c, int x, int y) {
    frame_.flip(c, x, y);
    if (journal_)
        touched_bits_.push_back((uint64_t(c - first_) * S_ + x) * S_ + y);
    uint32_t cell = uint32_t(x) * S_ + y;
    for (int k = 0; k <= M_; ++k) {
        int64_t m = c + marks_[k];
        if (m >= end_)
            break;
        uint32_t ij = inv_[k][cell];
        size_t idx = size_t(m - first_) * S_ + (ij / S_);
        uint32_t old = synd_[idx];
        uint32_t neu = old ^ col_[uint32_t(M_ - k) * S_ + (ij % S_)];
        synd_[idx] = neu;
        if (old == 0) {
            if (journal_)
                touched_synd_.push_back(idx);
            if (nzrows_[m - first_]++ == 0) {
                nz_lo_ = std::min(nz_lo_, m);
                nz_hi_ = std::max(nz_hi_, m);
            }
            ++global_nz_;
        } else if (neu == 0) {
            --nzrows_[m - first_];
            --global_nz_;
        }
    }
}

void FrameDecoder::note_event(int64_t m, int i, int pos, int64_t c, int x, int y) {
    FlipEvent ev;
    ev.constraint = m;
    ev.row = int32_t(i);
    ev.pos = int32_t(pos);
    ev.bit = {c, int32_t(x), int32_t(y)};
    bool ref_bit = reference_ ? reference_->get(c, x, y) : false;
    ev.introduced_error = frame_.get(c, x, y) == ref_bit;
    int32_t errs = 0;
    for (int p = 0; p < (M_ + 1) * S_; ++p) {
        int k = M_ - p / S_;
        int64_t cb = m - marks_[k];
        uint32_t cl = fwd_[k][uint32_t(i) * S_ + (p % S_)];
        bool have = frame_.get(cb, cl / S_, cl % S_);
        bool want = reference_ ? reference_->get(cb, cl / S_, cl % S_) : false;
        errs += have != want;
    }
    ev.row_errors_before = errs;
    events_.push_back(ev);
}

int64_t FrameDecoder::iterate(int64_t lo, int64_t hi) {
    int64_t flips = 0;
    for (int64_t m = lo; m <= hi; ++m) {
        if (nzrows_[m - first_] == 0)
            continue;
        uint32_t* srow = synd_.data() + size_t(m - first_) * S_;
        for (int i = 0; i < S_; ++i) {
            uint32_t s = srow[i];
            if (s == 0)
                continue;
            if (s & overall_mask_) {
                int32_t p = label2pos_[s & label_mask_];
                if (p >= 0) {
                    int k = M_ - p / S_;
                    int j = p % S_;
                    int64_t c = m - marks_[k];
                    uint32_t cell = fwd_[k][uint32_t(i) * S_ + j];
                    int x = int(cell / S_), y = int(cell % S_);
                    if (layout_.is_pinned(c, y)) {
                        ++stats_.pinned_suppressed;
                        ++stats_.detected;
                    } else {
                        if (trace_)
                            note_event(m, i, p, c, x, y);
                        apply_flip(c, x, y);
                        ++flips;
                    }
                    continue;
                }
            }
            ++stats_.detected;
        }
    }
    stats_.flips += flips;
    return flips;
}

DecodeStats FrameDecoder::decode() {
    stats_ = {};
    // The window leading edge advances one block per position, starting from
    // the virtual-zero head so early constraints enter one at a time, and
    // draining past the frame end so late constraints get the same number of
    // decoding opportunities as interior ones.
    for (int64_t ws = first_ - W_ + 1; ws < F_; ++ws) {
        if (global_nz_ == 0)
            break;
        // window covers blocks [ws, ws+W); constraints fully inside it
        int64_t lo = std::max(ws + first_, first_);
        int64_t hi = std::min(ws + W_ - 1, end_ - 1);
        if (lo > hi)
            continue;
        if (nz_hi_ < lo)
            break; // residual noise is left of every future window
        if (nz_lo_ > hi)
            continue;
        for (int it = 0; it < code_.iterations(); ++it) {
            ++stats_.iterations;
            if (iterate(lo, hi) == 0)
                break;
        }
    }
    if (global_nz_ == 0) {
        nz_lo_ = std::numeric_limits<int64_t>::max();
        nz_hi_ = -1;
    } else {
        for (int64_t q = 0; q < F_; ++q)
            stats_.residual_constraints += nzrows_[q] != 0;
    }
    return stats_;
}

void FrameDecoder::extract_info(uint64_t* out_words) const {
    const int width = S_ - r_;
    int64_t idx = 0;
    uint64_t acc = 0;
    for (int64_t c = first_; c < term_start_; ++c) {
        const uint64_t* rows = frame_.row(c, 0);
        const int stride = frame_.stride();
        for (int j = 0; j < width; ++j) {
            for (int i = 0; i < S_; ++i, ++idx) {
                uint64_t bit = (rows[size_t(i) * stride + (j >> 6)] >> (j & 63)) & 1;
                acc |= bit << (idx & 63);
                if ((idx & 63) == 63) {
                    out_words[idx >> 6] = acc;
                    acc = 0;
                }
            }
        }
    }
    if (idx & 63)
        out_words[idx >> 6] = acc;
}

uint32_t FrameDecoder::recompute_syndrome(int64_t m, int row) const {
    uint32_t s = 0;
    for (int p = 0; p < (M_ + 1) * S_; ++p) {
        int k = M_ - p / S_;
        int64_t c = m - marks_[k];
        uint32_t cell = fwd_[k][uint32_t(row) * S_ + (p % S_)];
        if (frame_.get(c, cell / S_, cell % S_))
            s ^= col_[p];
    }
    return s;
}

SparseDecodeResult FrameDecoder::decode_sparse(std::span<const int64_t> flip_tindices) {
    for (int64_t t : flip_tindices)
        if (t < 0 || t >= layout_.transmitted_bits())
            throw std::out_of_range("decode_sparse: flip index outside the frame");
    journal_ = true;
    for (int64_t t : flip_tindices) {
        BitCoord bc = layout_.transmitted_coord(t);
        apply_flip(bc.block, bc.row, bc.col);
    }
    SparseDecodeResult res;
    res.stats = decode();
    res.residual_syndromes = global_nz_;

    // Restore the zero state, counting what the decoder left behind.
    for (uint64_t packed : touched_bits_) {
        int y = int(packed % S_);
        uint64_t rest = packed / S_;
        int x = int(rest % S_);
        int64_t c = first_ + int64_t(rest / S_);
        if (frame_.get(c, x, y)) {
            ++res.residual_set_bits;
            if (c < term_start_ && y < S_ - r_)
                ++res.info_bit_errors;
            frame_.flip(c, x, y);
        }
    }
    for (size_t idx : touched_synd_) {
        synd_[idx] = 0;
        nzrows_[idx / S_] = 0;
    }
    global_nz_ = 0;
    nz_lo_ = std::numeric_limits<int64_t>::max();
    nz_hi_ = -1;
    touched_bits_.clear();
    touched_synd_.clear();
    journal_ = false;
    res.clean = res.residual_set_bits == 0 && res.residual_syndromes == 0;
    return res;
}

} // namespace staircase
