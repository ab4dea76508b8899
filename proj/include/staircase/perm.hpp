#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace staircase {

enum class PermKind {
    Shift,      // pi_k(i,j) = (j, i+(k-1)j) mod S
    Involution, // pi_k(i,j) = (-(k-1)i+j, (1-(k-1)^2)i+(k-1)j) mod S
};

const char* to_string(PermKind kind);

// Family of M+1 permutations of [S]x[S] with pi_0 the identity, stored as
// forward and inverse lookup tables (cell index a*S+b -> cell index).
// For M <= lpf(S) both kinds form an (M+1,S)-net: any two rows taken from
// distinct permuted copies of a block intersect in exactly one cell.
class PermFamily {
  public:
    PermFamily(int S, int M, PermKind kind);

    int S() const { return S_; }
    int M() const { return M_; }
    PermKind kind() const { return kind_; }

    uint32_t map(int k, uint32_t cell) const { return fwd_[k][cell]; }
    uint32_t inv(int k, uint32_t cell) const { return inv_[k][cell]; }

    std::pair<int, int> map(int k, int i, int j) const {
        uint32_t c = fwd_[k][uint32_t(i) * S_ + j];
        return {int(c / S_), int(c % S_)};
    }
    std::pair<int, int> inv(int k, int a, int b) const {
        uint32_t c = inv_[k][uint32_t(a) * S_ + b];
        return {int(c / S_), int(c % S_)};
    }

    const uint32_t* fwd_table(int k) const { return fwd_[k].data(); }
    const uint32_t* inv_table(int k) const { return inv_[k].data(); }

  private:
    int S_;
    int M_;
    PermKind kind_;
    std::vector<std::vector<uint32_t>> fwd_;
    std::vector<std::vector<uint32_t>> inv_;
};

struct NetCheck {
    bool ok = false;
    bool exhaustive = true; // false when the sampled fallback was used
    std::string detail;     // first violation found, if any
};

// Net property check. Exhaustive (O(M^2 S^2) counting over cells) for
// S <= exhaustive_limit; above that a sampled check labeled non-exhaustive.
NetCheck check_net(const PermFamily& family, int exhaustive_limit = 1024);

inline bool verify_net(const PermFamily& family, int exhaustive_limit = 1024) {
    return check_net(family, exhaustive_limit).ok;
}

// Least prime factor. Throws std::domain_error for S < 2.
int64_t lpf(int64_t S);

} // namespace staircase
