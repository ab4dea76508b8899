#include "staircase/component.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace staircase {

namespace {

int ceil_log2(int64_t v) {
    int b = 0;
    while ((int64_t(1) << b) < v)
        ++b;
    return b;
}

} // namespace

ComponentCode::ComponentCode(int S, int M) {
    if (S < 2 || M < 1)
        throw std::invalid_argument("ComponentCode: need S >= 2 and M >= 1");
    const int64_t n = int64_t(M + 1) * S;
    const int r = ceil_log2(n) + 1;
    if (n < r + 1)
        throw std::invalid_argument("ComponentCode: length " + std::to_string(n) +
                                    " leaves no room for information bits");
    if (r - 1 > 30)
        throw std::invalid_argument("ComponentCode: parent code too large");
    n_ = int(n);
    r_ = r;
    label_mask_ = (1u << (r - 1)) - 1;

    const uint32_t parent = 1u << (r - 1);
    col_.resize(n_);
    label_to_pos_.assign(parent, -1);

    // pivot labels 2^0..2^(r-2), 0 -> parity positions n-r..n-1 (in that order)
    std::vector<uint8_t> is_pivot(parent, 0);
    for (int t = 0; t < r - 1; ++t) {
        uint32_t label = 1u << t;
        is_pivot[label] = 1;
        col_[n_ - r_ + t] = label | parent;
        label_to_pos_[label] = n_ - r_ + t;
    }
    is_pivot[0] = 1;
    col_[n_ - 1] = parent; // label 0: the pure overall-parity column
    label_to_pos_[0] = n_ - 1;

    // data positions take the smallest non-pivot labels in increasing order
    int32_t pos = 0;
    for (uint32_t label = 0; label < parent && pos < n_ - r_; ++label) {
        if (is_pivot[label])
            continue;
        col_[pos] = label | parent;
        label_to_pos_[label] = pos;
        ++pos;
    }
    if (pos != n_ - r_)
        throw std::logic_error("ComponentCode: label assignment failed");
}

uint32_t ComponentCode::column(int32_t p) const {
    if (p < 0 || p >= n_)
        throw std::out_of_range("ComponentCode::column: position out of range");
    return col_[p];
}

uint32_t ComponentCode::syndrome(std::span<const uint8_t> word) const {
    if (word.size() != size_t(n_))
        throw std::invalid_argument("ComponentCode::syndrome: word length mismatch");
    uint32_t s = 0;
    for (int p = 0; p < n_; ++p)
        if (word[p])
            s ^= col_[p];
    return s;
}

std::vector<uint8_t> ComponentCode::encode_parity(std::span<const uint8_t> info) const {
    if (info.size() != size_t(n_ - r_))
        throw std::invalid_argument("ComponentCode::encode_parity: info length mismatch");
    uint32_t s = 0;
    for (int p = 0; p < n_ - r_; ++p)
        if (info[p])
            s ^= col_[p];
    uint32_t pw = parity_word_for(s);
    std::vector<uint8_t> parity(r_);
    for (int t = 0; t < r_; ++t)
        parity[t] = (pw >> t) & 1;
    return parity;
}

} // namespace staircase
