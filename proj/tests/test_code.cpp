#include "staircase/code.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace staircase;

namespace {

// The five reference designs exercised throughout the suite.
struct Row {
    int S, M, r;
    int64_t F, W;
    int iterations;
    double w_mbits, r_nominal, r_block;
};

const Row kRows[] = {
    {669, 3, 13, 725, 21, 3, 9.399, 0.98057, 0.98000},
    {409, 3, 12, 926, 21, 3, 3.513, 0.97066, 0.97000},
    {307, 3, 12, 885, 21, 4, 1.979, 0.96091, 0.96000},
    {179, 4, 11, 1634, 36, 4, 1.153, 0.93855, 0.93725},
    {47, 4, 9, 912, 48, 6, 0.106, 0.80851, 0.80000},
};

CodeParams params_for(const Row& row) {
    CodeParams p;
    p.S = row.S;
    p.M = row.M;
    p.ruler = optimal_ruler(row.M + 1);
    p.F = row.F;
    p.W = row.W;
    p.iterations = row.iterations;
    return p;
}

CodeParams small_params(int S, int M, std::vector<int> marks, int64_t F, int64_t W,
                        PermKind kind = PermKind::Involution) {
    CodeParams p;
    p.S = S;
    p.M = M;
    p.ruler = GolombRuler{std::move(marks)};
    p.F = F;
    p.W = W;
    p.iterations = 2;
    p.perm_kind = kind;
    return p;
}

} // namespace

TEST_CASE("reference designs validate and reproduce derived parameters") {
    for (const Row& row : kRows) {
        Code code(params_for(row));
        CHECK(code.r() == row.r);
        CHECK(code.validate().ok());
        CHECK(std::abs(code.window_mbits() - row.w_mbits) < 5e-4);
        CHECK(std::abs(code.nominal_rate() - row.r_nominal) < 5e-6);
        CHECK(std::abs(code.block_rate() - row.r_block) < 5e-6);
    }
}

TEST_CASE("validation flags structural problems") {
    CodeParams p = small_params(6, 3, {0, 1, 4, 6}, 40, 10);
    ValidationReport rep = Code(p).validate();
    CHECK_FALSE(rep.ok());
    bool lpf_failed = false;
    for (const auto& item : rep.items)
        if (item.name == "M <= lpf(S)" && !item.pass)
            lpf_failed = true;
    CHECK(lpf_failed);

    CodeParams bad_r = params_for(kRows[0]);
    bad_r.r_explicit = 12;
    ValidationReport rep2 = Code(bad_r).validate();
    CHECK_FALSE(rep2.ok());
    bad_r.r_explicit = 13;
    CHECK(Code(bad_r).validate().ok());

    CodeParams bad_ruler = small_params(7, 3, {0, 1, 2, 3}, 40, 10);
    CHECK_FALSE(Code(bad_ruler).validate().ok());

    CodeParams tight_w = small_params(7, 3, {0, 1, 4, 6}, 40, 6); // W == d_M
    CHECK_FALSE(Code(tight_w).validate().ok());

    CodeParams tight_f = small_params(7, 3, {0, 1, 4, 6}, 10, 10); // F == W
    CHECK_FALSE(Code(tight_f).validate().ok());

    CHECK_THROWS_AS(make_validated(small_params(6, 3, {0, 1, 4, 6}, 40, 10)),
                    std::invalid_argument);
}

TEST_CASE("construction rejects malformed parameter tuples") {
    CHECK_THROWS(Code(small_params(7, 3, {0, 1, 4}, 40, 10)));    // order != M+1
    CHECK_THROWS(Code(small_params(7, 3, {1, 2, 4, 6}, 40, 10))); // d_0 != 0
    CHECK_THROWS(Code(small_params(7, 3, {0, 4, 4, 6}, 40, 10))); // not increasing
}

TEST_CASE("classical staircase locate (M=1)") {
    const int S = 8;
    Code code(small_params(S, 1, {0, 1}, 30, 5));
    for (int64_t c : {int64_t(0), int64_t(3)}) {
        for (int a = 0; a < S; ++a) {
            for (int b = 0; b < S; ++b) {
                auto slots = code.locate({c, a, b});
                REQUIRE(slots.size() == 2);
                CHECK(slots[0].constraint == c);
                CHECK(slots[0].row == a);
                CHECK(slots[0].pos == S + b);
                CHECK(slots[1].constraint == c + 1);
                CHECK(slots[1].row == b);
                CHECK(slots[1].pos == a);
            }
        }
    }
}

TEST_CASE("locate geometry on S=7, M=3") {
    Code code(small_params(7, 3, {0, 1, 4, 6}, 40, 10));
    const int S = 7, M = 3;
    for (int64_t c = 0; c < 8; ++c) {
        for (int a = 0; a < S; ++a) {
            for (int b = 0; b < S; ++b) {
                BitCoord bit{c, a, b};
                auto slots = code.locate(bit);
                REQUIRE(slots.size() == 4);
                // constraint set is c + ruler, k=0 slot is the identity segment
                CHECK(slots[0].constraint == c);
                CHECK(slots[1].constraint == c + 1);
                CHECK(slots[2].constraint == c + 4);
                CHECK(slots[3].constraint == c + 6);
                CHECK(slots[0].row == a);
                CHECK(slots[0].pos == M * S + b);
                // member() inverts every slot
                for (const auto& slot : slots) {
                    BitCoord back = code.member(slot.constraint, slot.row, slot.pos);
                    CHECK(back == bit);
                }
            }
        }
    }
}

TEST_CASE("constraint_members inverts locate and stays in the window span") {
    Code code(small_params(7, 3, {0, 1, 4, 6}, 40, 10));
    const int S = 7, M = 3, dM = 6;
    for (int64_t m = dM; m < dM + 8; ++m) {
        for (int i = 0; i < S; ++i) {
            auto bits = code.constraint_members(m, i);
            REQUIRE(int(bits.size()) == (M + 1) * S);
            for (int pos = 0; pos < int(bits.size()); ++pos) {
                CHECK(bits[pos].block >= m - dM);
                CHECK(bits[pos].block <= m);
                auto slots = code.locate(bits[pos]);
                bool found = false;
                for (const auto& s : slots)
                    found |= s.constraint == m && s.row == i && s.pos == pos;
                CHECK(found);
            }
        }
    }
    // the first constraint reaches only initialization blocks on k > 0
    auto first = code.constraint_members(dM, 0);
    for (int pos = 0; pos < M * S; ++pos)
        CHECK(first[pos].block < dM);
}

TEST_CASE("pairwise codeword intersection") {
    CHECK(verify_intersection(Code(small_params(7, 3, {0, 1, 4, 6}, 40, 10))));
    CHECK(verify_intersection(
        Code(small_params(11, 4, {0, 1, 4, 9, 11}, 60, 15, PermKind::Involution))));
    CHECK(verify_intersection(
        Code(small_params(11, 4, {0, 1, 4, 9, 11}, 60, 15, PermKind::Shift))));
    // breaking either hypothesis breaks the guarantee
    CHECK_FALSE(verify_intersection(Code(small_params(7, 3, {0, 1, 2, 3}, 40, 10))));
    CHECK_FALSE(verify_intersection(Code(small_params(6, 3, {0, 1, 4, 6}, 40, 10))));
}

TEST_CASE("block rate approaches the nominal rate as F grows") {
    CodeParams p = params_for(kRows[4]);
    p.F = 2'000'000'000;
    Code code(p);
    CHECK(std::abs(code.block_rate() - code.nominal_rate()) < 1e-6);
}

TEST_CASE("exact block rate ratio") {
    Code code(params_for(kRows[4]));
    auto [num, den] = code.block_rate_ratio();
    CHECK(num == 32832); // 38 * 864
    CHECK(den == 41040); // 47*864 + 48*9
    CHECK(num * 5 == den * 4); // exactly 0.8
}
