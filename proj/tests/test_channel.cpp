#include "staircase/channel.hpp"

#include "staircase/philox.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace staircase;

namespace {

// High-precision Q oracle in long double: Maclaurin series for small x,
// backward-evaluated Laplace continued fraction for large x.
long double qfunc_oracle(long double x) {
    if (x < 0)
        return 1.0L - qfunc_oracle(-x);
    const long double z = x / std::sqrt(2.0L);
    const long double sqrt_pi = 1.7724538509055160272981674833411452L;
    if (x < 2.0L) {
        long double term = z, sum = z;
        for (int n = 1; n < 200; ++n) {
            term *= -z * z / n;
            sum += term / (2 * n + 1);
            if (std::fabs(term) < 1e-30L)
                break;
        }
        long double erf = 2.0L / sqrt_pi * sum;
        return 0.5L * (1.0L - erf);
    }
    long double f = 0.0L;
    for (int n = 60; n >= 1; --n)
        f = (n / 2.0L) / (z + f);
    long double erfc = std::exp(-z * z) / sqrt_pi / (z + f);
    return 0.5L * erfc;
}

} // namespace

TEST_CASE("binary entropy and its inverse") {
    CHECK(entropy2(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy2(0.0) == 0.0);
    CHECK(entropy2(1.0) == 0.0);
    for (double p : {0.01, 0.1, 0.3})
        CHECK(entropy2_inv(entropy2(p)) == doctest::Approx(p).epsilon(1e-9));
    CHECK_THROWS_AS(entropy2(-0.1), std::domain_error);
    CHECK_THROWS_AS(entropy2_inv(1.5), std::domain_error);
}

TEST_CASE("Q function matches the high-precision oracle") {
    for (int k = 1; k <= 20; ++k) {
        double x = 0.4 * k;
        long double want = qfunc_oracle(x);
        CHECK(std::fabs((qfunc(x) - double(want)) / double(want)) < 1e-10);
    }
    for (double x : {0.3, 1.0, 2.5, 6.0})
        CHECK(qfunc_inv(qfunc(x)) == doctest::Approx(x).epsilon(1e-9));
}

TEST_CASE("hard-decision Shannon limit") {
    // closed form: ebn0* = Qinv(h2inv(1-R))^2 / (2R); independent of bisection
    for (double R : {0.5, 0.8, 0.9, 0.96, 0.98}) {
        double pstar = shannon_limit_crossover(R);
        double closed = 10.0 * std::log10(std::pow(qfunc_inv(pstar), 2) / (2.0 * R));
        CHECK(shannon_limit_ebn0_db(R) == doctest::Approx(closed).epsilon(1e-6));
    }
    CHECK(shannon_limit_ebn0_db(0.98) == doctest::Approx(6.30).epsilon(2e-3));
    // monotone in R
    double prev = shannon_limit_ebn0_db(0.5);
    for (double R : {0.8, 0.9, 0.96, 0.98}) {
        double cur = shannon_limit_ebn0_db(R);
        CHECK(cur > prev);
        prev = cur;
    }
    // at 0 dB gap the crossover sits exactly at the capacity-matching point
    for (double R : {0.8, 0.98})
        CHECK(gap_to_crossover(R, 0.0) ==
              doctest::Approx(shannon_limit_crossover(R)).epsilon(1e-6));
}

TEST_CASE("gap to crossover reproduces the reference operating points") {
    struct {
        double R, gap_db, p;
    } rows[] = {
        {0.98000, 0.585, 9.86e-4}, {0.97000, 0.650, 1.57e-3}, {0.96000, 0.750, 2.09e-3},
        {0.93725, 0.950, 3.25e-3}, {0.80000, 1.850, 1.05e-2},
    };
    for (auto [R, gap, p] : rows) {
        double got = gap_to_crossover(R, gap);
        CHECK(std::fabs(got - p) / p < 0.01);
        // exact round trip through the computed crossover
        CHECK(crossover_to_gap(R, got) == doctest::Approx(gap).epsilon(1e-6));
        // the tabulated p carries 3 significant digits, worth ~0.004 dB
        CHECK(std::fabs(crossover_to_gap(R, p) - gap) < 5e-3);
    }
}

TEST_CASE("crossover/gap round trip on random points") {
    Philox4x32 rng(99);
    for (int t = 0; t < 50; ++t) {
        double R = 0.5 + 0.49 * rng.next_unit();
        double gap = 3.0 * rng.next_unit();
        double p = gap_to_crossover(R, gap);
        CHECK(crossover_to_gap(R, p) == doctest::Approx(gap).epsilon(1e-6));
    }
}

TEST_CASE("crossover above the limit is rejected, the limit itself maps to 0 dB") {
    double pstar = shannon_limit_crossover(0.8);
    CHECK(std::fabs(crossover_to_gap(0.8, pstar)) < 1e-6);
    CHECK_THROWS_AS(crossover_to_gap(0.8, pstar * 1.01), std::domain_error);
    CHECK_THROWS_AS(gap_to_crossover(0.8, -0.5), std::domain_error);
}
