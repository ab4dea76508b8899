#include "staircase/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace staircase {

double entropy2(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::domain_error("entropy2: p outside [0,1]");
    if (p == 0.0 || p == 1.0)
        return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy2_inv(double h) {
    if (h < 0.0 || h > 1.0)
        throw std::domain_error("entropy2_inv: h outside [0,1]");
    double lo = 0.0, hi = 0.5;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (entropy2(mid) < h ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double qfunc_inv(double p) {
    if (p <= 0.0 || p >= 1.0)
        throw std::domain_error("qfunc_inv: p outside (0,1)");
    double lo = -40.0, hi = 40.0; // Q is decreasing
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::fabs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        (qfunc(mid) > p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double shannon_limit_crossover(double R) {
    if (R <= 0.0 || R >= 1.0)
        throw std::domain_error("shannon_limit_crossover: R outside (0,1)");
    return entropy2_inv(1.0 - R);
}

double shannon_limit_ebn0_db(double R) {
    if (R <= 0.0 || R >= 1.0)
        throw std::domain_error("shannon_limit_ebn0_db: R outside (0,1)");
    // BSC capacity 1 - h2(Q(sqrt(2 R ebn0))) is increasing in ebn0; bisect.
    // Tests cross-check against the closed form Qinv(h2inv(1-R))^2 / (2R).
    auto achieved_rate = [R](double ebn0_lin) {
        return 1.0 - entropy2(qfunc(std::sqrt(2.0 * R * ebn0_lin)));
    };
    double lo = 1e-9, hi = 1.0;
    while (achieved_rate(hi) < R)
        hi *= 2.0;
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        (achieved_rate(mid) < R ? lo : hi) = mid;
    }
    return 10.0 * std::log10(0.5 * (lo + hi));
}

double gap_to_crossover(double R, double gap_db) {
    if (gap_db < 0.0)
        throw std::domain_error("gap_to_crossover: gap must be >= 0 dB");
    double limit_lin = std::pow(10.0, shannon_limit_ebn0_db(R) / 10.0);
    double ebn0 = limit_lin * std::pow(10.0, gap_db / 10.0);
    return qfunc(std::sqrt(2.0 * R * ebn0));
}

double crossover_to_gap(double R, double p) {
    double pstar = shannon_limit_crossover(R);
    if (p <= 0.0 || p > pstar)
        throw std::domain_error("crossover_to_gap: p must be in (0, p*(R)]");
    double q = qfunc_inv(p);
    double ebn0 = q * q / (2.0 * R);
    return 10.0 * std::log10(ebn0) - shannon_limit_ebn0_db(R);
}

} // namespace staircase
