#include "staircase/encoder.hpp"

#include "staircase/decoder.hpp"
#include "staircase/philox.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <vector>

using namespace staircase;

namespace {

CodeParams reduced_params(int S, int M, int64_t W, int iterations) {
    CodeParams p;
    p.S = S;
    p.M = M;
    p.ruler = optimal_ruler(M + 1);
    p.W = W;
    p.F = W + 10;
    p.iterations = iterations;
    return p;
}

std::vector<uint64_t> random_info(const Code& code, uint64_t seed) {
    FrameLayout layout(code);
    std::vector<uint64_t> words(size_t((layout.info_bits() + 63) / 64));
    Philox4x32 rng(seed);
    for (auto& w : words)
        w = rng.next_u64();
    return words;
}

} // namespace

TEST_CASE("all-zero info encodes to the all-zero frame") {
    Code code(reduced_params(47, 4, 48, 6));
    FrameEncoder enc(code);
    std::vector<uint64_t> info(size_t((enc.layout().info_bits() + 63) / 64), 0);
    BlockRun frame(code.S(), code.d_max(), code.F());
    enc.encode_frame(info.data(), frame);
    for (int64_t c = code.d_max(); c < code.d_max() + code.F(); ++c)
        for (int x = 0; x < code.S(); ++x)
            for (int y = 0; y < code.S(); ++y)
                CHECK_FALSE(frame.get(c, x, y));
}

TEST_CASE("every constraint of an encoded random frame has zero syndrome") {
    Code code(reduced_params(47, 4, 48, 6));
    FrameEncoder enc(code);
    auto info = random_info(code, 11);
    BlockRun frame(code.S(), code.d_max(), code.F());
    enc.encode_frame(info.data(), frame);
    CHECK(oracle::frame_is_codeword(code, frame));
}

TEST_CASE("block encoder agrees with the frame encoder") {
    Code code(reduced_params(13, 2, 8, 2));
    const int S = code.S(), r = code.r();
    FrameEncoder enc(code);
    FrameLayout layout(code);
    auto info = random_info(code, 23);
    BlockRun frame(S, code.d_max(), code.F());
    enc.encode_frame(info.data(), frame);

    BlockEncoder blocks(code);
    std::vector<uint8_t> block_info(size_t(S) * (S - r));
    int64_t idx = 0;
    for (int64_t b = 0; b < code.F(); ++b) {
        const uint8_t* src = nullptr;
        if (b < code.F() - code.W()) {
            for (int j = 0; j < S - r; ++j)
                for (int i = 0; i < S; ++i, ++idx)
                    block_info[size_t(i) * (S - r) + j] = (info[idx >> 6] >> (idx & 63)) & 1;
            src = block_info.data();
        }
        BitMatrix blk = blocks.encode_block(src);
        int64_t c = code.d_max() + b;
        for (int x = 0; x < S; ++x)
            for (int y = 0; y < S; ++y)
                CHECK(blk.get(x, y) == frame.get(c, x, y));
    }
}

TEST_CASE("encoding is linear over information words") {
    Code code(reduced_params(13, 2, 8, 2));
    auto a = random_info(code, 5), b = random_info(code, 6);
    std::vector<uint64_t> both(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        both[i] = a[i] ^ b[i];
    FrameEncoder enc(code);
    BlockRun fa(code.S(), code.d_max(), code.F());
    BlockRun fb(code.S(), code.d_max(), code.F());
    BlockRun fs(code.S(), code.d_max(), code.F());
    enc.encode_frame(a.data(), fa);
    enc.encode_frame(b.data(), fb);
    enc.encode_frame(both.data(), fs);
    for (int64_t c = code.d_max(); c < code.d_max() + code.F(); ++c)
        for (int x = 0; x < code.S(); ++x)
            for (int y = 0; y < code.S(); ++y)
                CHECK(fs.get(c, x, y) == (fa.get(c, x, y) ^ fb.get(c, x, y)));
}

TEST_CASE("terminated blocks carry parity only and still satisfy constraints") {
    Code code(reduced_params(13, 2, 8, 2));
    FrameLayout layout(code);
    auto info = random_info(code, 7);
    FrameEncoder enc(code);
    BlockRun frame(code.S(), code.d_max(), code.F());
    enc.encode_frame(info.data(), frame);
    for (int64_t c = layout.term_start(); c < layout.end_block(); ++c)
        for (int x = 0; x < code.S(); ++x)
            for (int y = 0; y < code.S() - code.r(); ++y)
                CHECK_FALSE(frame.get(c, x, y));
    CHECK(oracle::frame_is_codeword(code, frame));
}

TEST_CASE("transmitted bit accounting matches the rate formula") {
    Code code(reduced_params(47, 4, 48, 6));
    FrameLayout layout(code);
    CHECK(layout.transmitted_bits() ==
          int64_t(code.S()) * (int64_t(code.S()) * (code.F() - code.W()) + code.W() * code.r()));
    CHECK(layout.info_bits() == int64_t(code.S() - code.r()) * code.S() * (code.F() - code.W()));
    // serial order covers every coordinate exactly once
    std::vector<uint8_t> seen(size_t(code.F()) * code.S() * code.S(), 0);
    for (int64_t t = 0; t < layout.transmitted_bits(); ++t) {
        BitCoord bc = layout.transmitted_coord(t);
        CHECK(bc.block >= layout.first_block());
        CHECK(bc.block < layout.end_block());
        if (bc.block >= layout.term_start())
            CHECK(bc.col >= code.S() - code.r());
        size_t key = (size_t(bc.block - layout.first_block()) * code.S() + bc.row) * code.S() +
                     bc.col;
        CHECK_FALSE(seen[key]);
        seen[key] = 1;
    }
}

TEST_CASE("noiseless round trip recovers the information bits") {
    for (auto [S, M, W, iters] : std::vector<std::array<int, 4>>{
             {47, 4, 48, 6}, {179, 4, 36, 4}}) {
        CodeParams p = reduced_params(S, M, W, iters);
        Code code(p);
        FrameEncoder enc(code);
        auto info = random_info(code, uint64_t(S));
        FrameDecoder dec(code);
        enc.encode_frame(info.data(), dec.frame());
        dec.init_syndromes();
        DecodeStats st = dec.decode();
        CHECK(st.flips == 0);
        CHECK(st.residual_constraints == 0);
        std::vector<uint64_t> out(info.size(), 0);
        dec.extract_info(out.data());
        int64_t nbits = enc.layout().info_bits();
        for (int64_t t = 0; t < nbits; ++t)
            CHECK(((info[t >> 6] >> (t & 63)) & 1) == ((out[t >> 6] >> (t & 63)) & 1));
    }
}
