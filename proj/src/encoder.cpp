#include "staircase/encoder.hpp"

#include <stdexcept>

namespace staircase {

BlockEncoder::BlockEncoder(const Code& code) : code_(code) {
    ring_.assign(size_t(code.d_max()), BitMatrix(code.S()));
    next_ = code.d_max();
}

void BlockEncoder::reset() {
    for (auto& b : ring_)
        b.clear();
    next_ = code_.d_max();
}

BitMatrix BlockEncoder::encode_block(const uint8_t* info) {
    const int S = code_.S();
    const int M = code_.M();
    const int r = code_.r();
    const int dM = code_.d_max();
    const auto& marks = code_.marks();
    const ComponentCode& comp = code_.component();
    const uint32_t* col = comp.column_table();

    BitMatrix blk(S);
    if (info) {
        for (int i = 0; i < S; ++i)
            for (int j = 0; j < S - r; ++j)
                if (info[size_t(i) * (S - r) + j])
                    blk.set(i, j);
    }

    for (int i = 0; i < S; ++i) {
        uint32_t s = 0;
        for (int k = M; k >= 1; --k) {
            int64_t c = next_ - marks[k];
            if (c < dM)
                continue; // virtual all-zero block
            const BitMatrix& hist = ring_[size_t(c % dM)];
            const uint32_t* fwd = code_.perms().fwd_table(k);
            const uint32_t base = uint32_t(M - k) * S;
            for (int j = 0; j < S; ++j) {
                uint32_t cell = fwd[uint32_t(i) * S + j];
                if (hist.get(int(cell / S), int(cell % S)))
                    s ^= col[base + j];
            }
        }
        const uint32_t own_base = uint32_t(M) * S;
        for (int j = 0; j < S - r; ++j)
            if (blk.get(i, j))
                s ^= col[own_base + j];
        uint32_t pw = comp.parity_word_for(s);
        for (int t = 0; t < r; ++t)
            if ((pw >> t) & 1)
                blk.set(i, S - r + t);
    }

    ring_[size_t(next_ % dM)] = blk;
    ++next_;
    return blk;
}

void FrameEncoder::encode_frame(const uint64_t* info_words, BlockRun& out) const {
    const int S = code_.S();
    const int M = code_.M();
    const int r = code_.r();
    const int64_t dM = code_.d_max();
    const int64_t F = code_.F();
    if (out.first() != dM || out.count() != F || out.S() != S)
        throw std::invalid_argument("encode_frame: output run has wrong shape");
    const auto& marks = code_.marks();
    const ComponentCode& comp = code_.component();
    const uint32_t* col = comp.column_table();

    out.clear();
    int64_t idx = 0; // running info bit index
    for (int64_t m = dM; m < dM + F; ++m) {
        if (m < layout_.term_start()) {
            for (int j = 0; j < S - r; ++j)
                for (int i = 0; i < S; ++i, ++idx)
                    if ((info_words[idx >> 6] >> (idx & 63)) & 1)
                        out.set(m, i, j);
        }
        for (int i = 0; i < S; ++i) {
            uint32_t s = 0;
            for (int k = M; k >= 1; --k) {
                int64_t c = m - marks[k];
                if (c < dM)
                    continue;
                const uint32_t* fwd = code_.perms().fwd_table(k);
                const uint32_t base = uint32_t(M - k) * S;
                const uint32_t* row_cells = fwd + uint32_t(i) * S;
                const uint64_t* blk = out.row(c, 0);
                const int stride = out.stride();
                for (int j = 0; j < S; ++j) {
                    uint32_t cell = row_cells[j];
                    // branchless: random data makes this branch unpredictable
                    uint32_t bit = (blk[(cell / S) * stride + ((cell % S) >> 6)] >>
                                    ((cell % S) & 63)) &
                                   1;
                    s ^= col[base + j] & (0u - bit);
                }
            }
            const uint32_t own_base = uint32_t(M) * S;
            const uint64_t* row = out.row(m, i);
            for (int j = 0; j < S - r; ++j) {
                uint32_t bit = (row[j >> 6] >> (j & 63)) & 1;
                s ^= col[own_base + j] & (0u - bit);
            }
            uint32_t pw = comp.parity_word_for(s);
            for (int t = 0; t < r; ++t)
                if ((pw >> t) & 1)
                    out.set(m, i, S - r + t);
        }
    }
}

} // namespace staircase
