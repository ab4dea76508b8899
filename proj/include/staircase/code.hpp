#pragma once

#include "staircase/component.hpp"
#include "staircase/golomb.hpp"
#include "staircase/perm.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace staircase {

// Full parameter tuple for one code instance. r is derived from (S, M); an
// explicit value is only accepted if it matches the derivation.
struct CodeParams {
    int S = 0;
    int M = 0;
    GolombRuler ruler;                           // order M+1
    PermKind perm_kind = PermKind::Involution;
    int64_t F = 0;                               // frame length in blocks
    int64_t W = 0;                               // decoding window in blocks
    int iterations = 1;                          // per window position
    int r_explicit = -1;                         // optional; must equal derived r
};

// A bit of the block stream: block index c (absolute, virtual zero blocks are
// c < d_M), row a, column b, all zero-based.
struct BitCoord {
    int64_t block = 0;
    int32_t row = 0;
    int32_t col = 0;

    bool operator==(const BitCoord&) const = default;
};

// One of the M+1 codeword positions covering a bit: constraint index m (the
// newest participating block), codeword row, and position within the word.
struct CodewordSlot {
    int64_t constraint = 0;
    int32_t row = 0;
    int32_t pos = 0;
};

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckItem> items;

    bool ok() const {
        for (const auto& it : items)
            if (!it.pass)
                return false;
        return true;
    }
    std::string to_string() const;
};

// Validated, immutable code instance: parameters plus the materialized
// permutation family and component code, and the bit <-> constraint maps.
//
// Constraint m >= d_M is the S-row matrix
//   [ Pi_M(B_{m-d_M}) | ... | Pi_1(B_{m-d_1}) | B_m ],
// each row a codeword of the component code; segment M-k holds block m-d_k.
class Code {
  public:
    explicit Code(CodeParams params);

    const CodeParams& params() const { return p_; }
    int S() const { return p_.S; }
    int M() const { return p_.M; }
    int64_t F() const { return p_.F; }
    int64_t W() const { return p_.W; }
    int iterations() const { return p_.iterations; }
    int r() const { return component_.r(); }
    int n() const { return component_.n(); }
    int d_max() const { return p_.ruler.length(); }
    const std::vector<int>& marks() const { return p_.ruler.marks; }

    const PermFamily& perms() const { return perms_; }
    const ComponentCode& component() const { return component_; }

    // The M+1 (constraint, row, position) slots covering a bit, ascending in
    // constraint index. For slot k: m = c + d_k, (i,j) = pi_k^{-1}(a,b),
    // pos = (M-k)S + j.
    std::vector<CodewordSlot> locate(const BitCoord& bit) const;

    // Inverse map: the bit sitting at `pos` of row `row` of constraint m.
    BitCoord member(int64_t m, int row, int pos) const;

    // All (M+1)S bits of one constraint row, in codeword position order.
    std::vector<BitCoord> constraint_members(int64_t m, int row) const;

    // Exact block rate R = ((S-r)(F-W)) / (S(F-W)+Wr) and its limits.
    std::pair<int64_t, int64_t> block_rate_ratio() const;
    double block_rate() const;
    double nominal_rate() const { return double(p_.S - r()) / p_.S; }
    double window_mbits() const { return double(p_.W) * p_.S * p_.S / 1e6; }

    int64_t info_bits_per_block() const { return int64_t(p_.S) * (p_.S - r()); }
    int64_t info_bits_per_frame() const { return info_bits_per_block() * (p_.F - p_.W); }
    int64_t transmitted_bits_per_frame() const {
        return int64_t(p_.S) * (int64_t(p_.S) * (p_.F - p_.W) + p_.W * r());
    }

    // Structural checks: ruler, net, lpf condition, r consistency, W > d_M,
    // F > W. Never throws; failures are carried in the report.
    ValidationReport validate(int net_exhaustive_limit = 1024) const;

  private:
    CodeParams p_;
    PermFamily perms_;
    ComponentCode component_;
};

// Builds a Code and throws std::invalid_argument listing every failed
// validation check. The net check uses the sampled fallback above the limit.
Code make_validated(const CodeParams& params, int net_exhaustive_limit = 1024);

// True iff every pair of distinct constraint rows over bits in blocks
// [d_M, d_M + block_span) shares at most one bit. Exhaustive; meant for
// small instances. block_span <= 0 selects the default 2*d_M + 1.
bool verify_intersection(const Code& code, int64_t block_span = 0);

} // namespace staircase
