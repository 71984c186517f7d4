#pragma once

#include <numbers>

namespace qb {

inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double zeta3 = 1.2020569031595942854;

struct RationalArg {
    long p;
    long q;
};

struct SignedLog {
    double log_abs;
    int sign;
};

double sin_pi(double x);
double cos_pi(double x);

// Gamma(x) for real x off the poles.
double gamma(double x);
SignedLog lgamma_signed(double x);
// 1/Gamma(x), zero at the poles.
double rgamma(double x);

double digamma(double x);
double digamma_rational(RationalArg r);
// psi(1/2 - 1/m) + psi(1/2 + 1/m)
double psi_half_pair_sum(int m);

// Li_s(z) for s in {2,3} and |z| <= 1.
double polylog(int s, double z);

double pochhammer(double v, long k);

} // namespace qb
