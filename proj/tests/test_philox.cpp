#include "staircase/philox.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace staircase;

TEST_CASE("philox 4x32-10 known-answer vectors") {
    // Random123 reference vectors
    auto zeros = Philox4x32::block({0, 0, 0, 0}, {0, 0});
    CHECK(zeros == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    auto ones = Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                  {0xffffffffu, 0xffffffffu});
    CHECK(ones == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    auto pi = Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                {0xa4093822u, 0x299f31d0u});
    CHECK(pi == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("sequential output walks the counter") {
    Philox4x32 rng(0);
    auto first = Philox4x32::block({0, 0, 0, 0}, {0, 0});
    auto second = Philox4x32::block({0, 0, 1, 0}, {0, 0});
    for (int i = 0; i < 4; ++i)
        CHECK(rng.next_u32() == first[i]);
    for (int i = 0; i < 4; ++i)
        CHECK(rng.next_u32() == second[i]);
}

TEST_CASE("unit draws stay in (0,1]") {
    Philox4x32 rng(42);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.next_unit();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("geometric gaps have roughly the right mean") {
    const double p = 0.01;
    Philox4x32 rng(5);
    double log1m = std::log1p(-p);
    double sum = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
        sum += double(rng.next_geometric(log1m));
    double mean = sum / n; // expected (1-p)/p = 99
    CHECK(mean == doctest::Approx(99.0).epsilon(0.05));
}

TEST_CASE("streams for distinct frames and points are distinct") {
    std::set<uint64_t> firsts;
    for (uint32_t point = 0; point < 3; ++point)
        for (uint64_t frame = 0; frame < 50; ++frame)
            for (uint32_t stream = 0; stream < 2; ++stream) {
                Philox4x32 rng = make_stream(1234, point, frame, stream);
                CHECK(firsts.insert(rng.next_u64()).second);
            }
    // same parameters reproduce the same stream
    Philox4x32 a = make_stream(1234, 1, 7, 0);
    Philox4x32 b = make_stream(1234, 1, 7, 0);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next_u32() == b.next_u32());
}
