#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

namespace staircase {

// S x S binary matrix, rows packed into 64-bit words.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(int S) : S_(S), stride_((S + 63) / 64), w_(size_t(S) * stride_) {}

    int S() const { return S_; }
    int stride() const { return stride_; }

    bool get(int x, int y) const { return (w_[size_t(x) * stride_ + (y >> 6)] >> (y & 63)) & 1; }
    void set(int x, int y) { w_[size_t(x) * stride_ + (y >> 6)] |= uint64_t(1) << (y & 63); }
    void flip(int x, int y) { w_[size_t(x) * stride_ + (y >> 6)] ^= uint64_t(1) << (y & 63); }

    const uint64_t* row(int x) const { return w_.data() + size_t(x) * stride_; }
    uint64_t* row(int x) { return w_.data() + size_t(x) * stride_; }

    void clear() { std::memset(w_.data(), 0, w_.size() * sizeof(uint64_t)); }

    bool operator==(const BitMatrix&) const = default;

  private:
    int S_ = 0;
    int stride_ = 0;
    std::vector<uint64_t> w_;
};

// Contiguous run of `count` S x S blocks indexed by an absolute block index
// starting at `first`; reads below `first` see the all-zero virtual blocks.
class BlockRun {
  public:
    BlockRun() = default;
    BlockRun(int S, int64_t first, int64_t count)
        : S_(S), stride_((S + 63) / 64), first_(first), count_(count),
          w_(size_t(count) * S * stride_) {}

    int S() const { return S_; }
    int stride() const { return stride_; }
    int64_t first() const { return first_; }
    int64_t count() const { return count_; }

    bool get(int64_t c, int x, int y) const {
        if (c < first_)
            return false;
        return (word(c, x)[y >> 6] >> (y & 63)) & 1;
    }
    void set(int64_t c, int x, int y) { word(c, x)[y >> 6] |= uint64_t(1) << (y & 63); }
    void flip(int64_t c, int x, int y) { word(c, x)[y >> 6] ^= uint64_t(1) << (y & 63); }

    const uint64_t* row(int64_t c, int x) const {
        return w_.data() + (size_t(c - first_) * S_ + x) * stride_;
    }
    uint64_t* row(int64_t c, int x) { return w_.data() + (size_t(c - first_) * S_ + x) * stride_; }

    void clear() { std::memset(w_.data(), 0, w_.size() * sizeof(uint64_t)); }

  private:
    const uint64_t* word(int64_t c, int x) const { return row(c, x); }
    uint64_t* word(int64_t c, int x) { return row(c, x); }

    int S_ = 0;
    int stride_ = 0;
    int64_t first_ = 0;
    int64_t count_ = 0;
    std::vector<uint64_t> w_;
};

// Sequential bit append/read with most-significant-bit-first byte packing.
class BitWriter {
  public:
    void push(bool bit) {
        if (nbits_ % 8 == 0)
            bytes_.push_back(0);
        if (bit)
            bytes_.back() |= uint8_t(0x80u >> (nbits_ % 8));
        ++nbits_;
    }
    uint64_t bit_count() const { return nbits_; }
    const std::vector<uint8_t>& bytes() const { return bytes_; }
    std::vector<uint8_t> take() { return std::move(bytes_); }

  private:
    std::vector<uint8_t> bytes_;
    uint64_t nbits_ = 0;
};

class BitReader {
  public:
    BitReader(const uint8_t* data, uint64_t nbits) : data_(data), nbits_(nbits) {}

    bool next() {
        bool b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1;
        ++pos_;
        return b;
    }
    uint64_t remaining() const { return nbits_ - pos_; }

  private:
    const uint8_t* data_;
    uint64_t nbits_;
    uint64_t pos_ = 0;
};

} // namespace staircase
