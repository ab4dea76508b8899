#pragma once

namespace staircase {

// Binary entropy h2(p) in bits; h2(0) = h2(1) = 0.
double entropy2(double p);

// Inverse of h2 on [0, 1/2], bisection to 1e-12 absolute.
double entropy2_inv(double h);

// Gaussian tail Q(x) = P(N(0,1) > x) and its inverse.
double qfunc(double x);
double qfunc_inv(double p);

// BSC crossover probability at the hard-decision Shannon limit for rate R:
// the p with R = 1 - h2(p).
double shannon_limit_crossover(double R);

// Minimum Eb/N0 (dB) at which a rate-R code meets BSC capacity under
// hard-decision BPSK on AWGN: solves R = 1 - h2(Q(sqrt(2 R Eb/N0))).
double shannon_limit_ebn0_db(double R);

// Crossover probability at a given gap (dB) above the hard-decision limit:
// p = Q(sqrt(2 R ebn0)) with ebn0 = limit(R) * 10^(gap/10).
double gap_to_crossover(double R, double gap_db);

// Inverse of gap_to_crossover. Throws std::domain_error for p outside
// (0, shannon_limit_crossover(R)).
double crossover_to_gap(double R, double p);

} // namespace staircase
