#include "staircase/component.hpp"

#include "staircase/philox.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>
#include <vector>

using namespace staircase;

namespace {

// Gaussian-elimination rank of r columns over GF(2); oracle for invertibility.
int gf2_rank(std::vector<uint32_t> cols, int rows) {
    int rank = 0;
    for (int bit = 0; bit < rows; ++bit) {
        size_t pivot = SIZE_MAX;
        for (size_t c = rank; c < cols.size(); ++c)
            if ((cols[c] >> bit) & 1) {
                pivot = c;
                break;
            }
        if (pivot == SIZE_MAX)
            continue;
        std::swap(cols[rank], cols[pivot]);
        for (size_t c = 0; c < cols.size(); ++c)
            if (c != size_t(rank) && ((cols[c] >> bit) & 1))
                cols[c] ^= cols[rank];
        ++rank;
    }
    return rank;
}

std::vector<uint8_t> random_word(Philox4x32& rng, int n) {
    std::vector<uint8_t> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = rng.next_u32() & 1;
    return w;
}

} // namespace

TEST_CASE("component dimensions match the design rows") {
    struct {
        int S, M, n, r;
    } rows[] = {
        {669, 3, 2676, 13}, {409, 3, 1636, 12}, {307, 3, 1228, 12},
        {179, 4, 895, 11},  {47, 4, 235, 9},
    };
    for (auto [S, M, n, r] : rows) {
        ComponentCode code(S, M);
        CHECK(code.n() == n);
        CHECK(code.r() == r);
        CHECK(code.parent_len() == (1 << (r - 1)));
        CHECK(code.shorten() == code.parent_len() - n);
    }
}

TEST_CASE("columns are distinct, nonzero, odd-overall, parity block invertible") {
    ComponentCode code(669, 3);
    std::set<uint32_t> seen;
    for (int p = 0; p < code.n(); ++p) {
        uint32_t c = code.column(p);
        CHECK(c != 0);
        CHECK((c & code.overall_parity_mask()) != 0);
        CHECK(seen.insert(c).second);
    }
    std::vector<uint32_t> parity_cols;
    for (int p = code.n() - code.r(); p < code.n(); ++p)
        parity_cols.push_back(code.column(p));
    CHECK(gf2_rank(parity_cols, code.r()) == code.r());
    CHECK_THROWS_AS(code.column(-1), std::out_of_range);
    CHECK_THROWS_AS(code.column(code.n()), std::out_of_range);
}

TEST_CASE("syndrome definition") {
    ComponentCode code(47, 4);
    const int n = code.n();
    std::vector<uint8_t> zero(n, 0);
    CHECK(code.syndrome(zero) == 0);
    for (int p = 0; p < n; ++p) {
        std::vector<uint8_t> unit(n, 0);
        unit[p] = 1;
        CHECK(code.syndrome(unit) == code.column(p));
    }
}

TEST_CASE("encode_parity completes any data word to a codeword") {
    ComponentCode code(47, 4);
    const int n = code.n(), r = code.r();
    std::vector<uint8_t> zero_info(n - r, 0);
    auto zero_parity = code.encode_parity(zero_info);
    for (uint8_t b : zero_parity)
        CHECK(b == 0);

    Philox4x32 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        auto info = random_word(rng, n - r);
        auto parity = code.encode_parity(info);
        std::vector<uint8_t> word = info;
        word.insert(word.end(), parity.begin(), parity.end());
        CHECK(code.syndrome(word) == 0);
    }
}

TEST_CASE("encode_parity is linear") {
    ComponentCode code(47, 4);
    const int n = code.n(), r = code.r();
    Philox4x32 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_word(rng, n - r);
        auto b = random_word(rng, n - r);
        std::vector<uint8_t> sum(n - r);
        for (int i = 0; i < n - r; ++i)
            sum[i] = a[i] ^ b[i];
        auto pa = code.encode_parity(a);
        auto pb = code.encode_parity(b);
        auto ps = code.encode_parity(sum);
        for (int i = 0; i < r; ++i)
            CHECK(ps[i] == (pa[i] ^ pb[i]));
    }
}

TEST_CASE("single-error correction is exhaustive at n=235") {
    ComponentCode code(47, 4);
    CHECK(code.decide(0).kind == DecodeAction::NoError);
    for (int p = 0; p < code.n(); ++p) {
        DecodeAction a = code.decide(code.column(p));
        CHECK(a.kind == DecodeAction::FlipAt);
        CHECK(a.pos == p);
    }
}

TEST_CASE("every double error is detected, never miscorrected (exhaustive n=235)") {
    ComponentCode code(47, 4);
    for (int p = 0; p < code.n(); ++p) {
        for (int q = p + 1; q < code.n(); ++q) {
            uint32_t s = code.column(p) ^ code.column(q);
            CHECK((s & code.overall_parity_mask()) == 0);
            CHECK(code.decide(s).kind == DecodeAction::DetectedUncorrectable);
        }
    }
}

TEST_CASE("syndromes pointing into the shortened region are flagged") {
    ComponentCode code(47, 4); // parent 256, keeps 235 labels
    int flagged = 0;
    for (uint32_t label = 0; label < uint32_t(code.parent_len()); ++label) {
        uint32_t s = label | code.overall_parity_mask();
        DecodeAction a = code.decide(s);
        if (a.kind == DecodeAction::DetectedUncorrectable)
            ++flagged;
        else
            CHECK(code.column(a.pos) == s);
    }
    CHECK(flagged == code.shorten());
}

TEST_CASE("degenerate sizes are rejected") {
    CHECK_THROWS(ComponentCode(2, 0));
    CHECK_THROWS(ComponentCode(1, 1));
}
