#include "staircase/perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace staircase {

const char* to_string(PermKind kind) {
    return kind == PermKind::Shift ? "shift" : "involution";
}

namespace {

inline int64_t mod_pos(int64_t x, int64_t s) {
    int64_t m = x % s;
    return m < 0 ? m + s : m;
}

} // namespace

PermFamily::PermFamily(int S, int M, PermKind kind) : S_(S), M_(M), kind_(kind) {
    if (S < 2)
        throw std::invalid_argument("PermFamily: S must be >= 2");
    if (M < 0)
        throw std::invalid_argument("PermFamily: M must be >= 0");
    const uint32_t cells = uint32_t(S) * uint32_t(S);
    fwd_.resize(M + 1);
    inv_.resize(M + 1);
    for (int k = 0; k <= M; ++k) {
        fwd_[k].resize(cells);
        inv_[k].assign(cells, UINT32_MAX);
        const int64_t c = k - 1; // pi_1 is the transpose for either kind
        for (int64_t i = 0; i < S; ++i) {
            for (int64_t j = 0; j < S; ++j) {
                int64_t x, y;
                if (k == 0) {
                    x = i;
                    y = j;
                } else if (kind == PermKind::Shift) {
                    x = j;
                    y = mod_pos(i + c * j, S);
                } else {
                    x = mod_pos(-c * i + j, S);
                    y = mod_pos((1 - c * c) * i + c * j, S);
                }
                uint32_t from = uint32_t(i) * S + uint32_t(j);
                uint32_t to = uint32_t(x) * S + uint32_t(y);
                fwd_[k][from] = to;
                if (inv_[k][to] != UINT32_MAX)
                    throw std::logic_error("PermFamily: map is not a bijection");
                inv_[k][to] = from;
            }
        }
    }
}

NetCheck check_net(const PermFamily& family, int exhaustive_limit) {
    const int S = family.S();
    const int M = family.M();
    NetCheck r;
    r.ok = true;
    if (M < 1)
        return r; // no distinct pairs to violate
    const uint32_t cells = uint32_t(S) * uint32_t(S);

    if (S <= exhaustive_limit) {
        // For each ordered pair (k,k'), map every cell to its (row under k,
        // row under k') pair; the net property holds iff this is a bijection.
        std::vector<uint8_t> seen(cells);
        for (int k = 0; k <= M && r.ok; ++k) {
            for (int kp = k + 1; kp <= M && r.ok; ++kp) {
                std::fill(seen.begin(), seen.end(), uint8_t(0));
                for (uint32_t cell = 0; cell < cells; ++cell) {
                    uint32_t a = family.inv(k, cell) / uint32_t(S);
                    uint32_t b = family.inv(kp, cell) / uint32_t(S);
                    uint32_t key = a * uint32_t(S) + b;
                    if (seen[key]) {
                        r.ok = false;
                        r.detail = "rows " + std::to_string(a) + " (k=" + std::to_string(k) +
                                   ") and " + std::to_string(b) + " (k=" + std::to_string(kp) +
                                   ") intersect in more than one cell";
                        break;
                    }
                    seen[key] = 1;
                }
            }
        }
        return r;
    }

    // Sampled fallback for large S: a repeated (row,row') key among sampled
    // cells is a definite violation; absence is only probabilistic evidence.
    r.exhaustive = false;
    const uint64_t samples = 200000;
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k <= M && r.ok; ++k) {
        for (int kp = k + 1; kp <= M && r.ok; ++kp) {
            std::unordered_set<uint64_t> seen;
            seen.reserve(samples * 2);
            for (uint64_t t = 0; t < samples; ++t) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                uint32_t cell = uint32_t((state >> 33) % cells);
                uint64_t a = family.inv(k, cell) / uint32_t(S);
                uint64_t b = family.inv(kp, cell) / uint32_t(S);
                if (!seen.insert(a * uint64_t(S) + b).second) {
                    // repeated key could be a resampled cell; recheck cheaply
                    bool dup_cell = false;
                    uint64_t st2 = 0x9e3779b97f4a7c15ull;
                    for (uint64_t u = 0; u < t && !dup_cell; ++u) {
                        st2 = st2 * 6364136223846793005ull + 1442695040888963407ull;
                        dup_cell = uint32_t((st2 >> 33) % cells) == cell;
                    }
                    if (!dup_cell) {
                        r.ok = false;
                        r.detail = "sampled row intersection violation at k=" +
                                   std::to_string(k) + ", k'=" + std::to_string(kp);
                        break;
                    }
                }
            }
        }
    }
    return r;
}

int64_t lpf(int64_t S) {
    if (S < 2)
        throw std::domain_error("lpf: argument must be >= 2");
    if (S % 2 == 0)
        return 2;
    for (int64_t d = 3; d * d <= S; d += 2)
        if (S % d == 0)
            return d;
    return S;
}

} // namespace staircase
