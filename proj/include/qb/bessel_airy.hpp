#pragma once

namespace qb {

double bessel_i(double nu, double x);
double bessel_k(double nu, double x);
// I_{-nu}(x) = I_nu(x) + (2 sin(pi nu)/pi) K_nu(x)
double bessel_i_minus_via_k(double nu, double x);

double airy_ai(double x);
double airy_bi(double x);

namespace detail {

// value = mant * exp(expo)
struct Scaled {
    double mant;
    double expo;
};

struct ScaledIK {
    double i; // e^{-x} I_nu(x)
    double k; // e^{x} K_nu(x)
};

// nu >= 0, x > 0
ScaledIK bessel_ik_scaled(double nu, double x);
// ascending series for I_nu, nu > -1
double bessel_i_series(double nu, double x);

double bessel_i_scaled(double nu, double x);
double bessel_k_scaled(double nu, double x);

Scaled airy_ai_scaled(double x);
Scaled airy_bi_scaled(double x);

} // namespace detail

} // namespace qb
