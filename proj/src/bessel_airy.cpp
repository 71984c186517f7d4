#include "qb/bessel_airy.hpp"

#include "qb/errors.hpp"
#include "qb/scalar_special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qb {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double fpmin = std::numeric_limits<double>::min() / eps;
constexpr double series_limit = 12.0;
constexpr double hankel_limit = 2000.0;

// Taylor coefficients of 1/Gamma(1+z)
constexpr std::array<double, 27> rgamma_taylor = {
    1.0,
    0.5772156649015328606065,
    -0.655878071520253881077,
    -0.042002635034095235529,
    0.1665386113822914895017,
    -0.04219773455554433674821,
    -0.009621971527876973562115,
    0.007218943246663099542395,
    -0.001165167591859065112114,
    -0.0002152416741149509728157,
    0.0001280502823881161861532,
    -0.00002013485478078823865569,
    -0.000001250493482142670657345,
    0.000001133027231981695882374,
    -2.05633841697760710345e-7,
    6.116095104481415817862e-9,
    5.002007644469222930056e-9,
    -1.181274570487020144588e-9,
    1.043426711691100510492e-10,
    7.78226343990507125405e-12,
    -3.696805618642205708188e-12,
    5.100370287454475979015e-13,
    -2.058326053566506783222e-14,
    -5.34812253942301798237e-15,
    1.226778628238260790159e-15,
    -1.181259301697458769514e-16,
    1.18669225475160033258e-18,
};

// gam1 = (1/G(1-mu) - 1/G(1+mu))/(2 mu), gam2 = (1/G(1-mu) + 1/G(1+mu))/2
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi)
{
    double m2 = mu * mu;
    double even = 0.0, odd = 0.0;
    for (std::size_t k = rgamma_taylor.size(); k-- > 0;) {
        if (k % 2 == 0)
            even = even * m2 + rgamma_taylor[k];
        else
            odd = odd * m2 + rgamma_taylor[k];
    }
    gam2 = even;
    gam1 = -odd;
    gampl = even + mu * odd;
    gammi = even - mu * odd;
}

bool is_integer(double v) { return v == std::floor(v); }

void check_x(double x, const char* who)
{
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(who) + ": argument must be positive");
}

} // namespace

namespace detail {

ScaledIK bessel_ik_scaled(double nu, double x)
{
    if (x > hankel_limit && x > 4.0 * nu * nu) {
        // large-argument expansions; the e^{-2x} part of I is below rounding here
        double mu4 = 4.0 * nu * nu, t = 1.0, si = 1.0, sk = 1.0;
        for (int k = 1; k < 40; ++k) {
            double odd = 2.0 * k - 1.0;
            t *= (mu4 - odd * odd) / (8.0 * k * x);
            si += (k % 2 ? -t : t);
            sk += t;
            if (std::fabs(t) < 1e-17) break;
        }
        return {si / std::sqrt(2.0 * pi * x), sk * std::sqrt(pi / (2.0 * x))};
    }
    const int maxit = 100000;
    int nl = static_cast<int>(nu + 0.5);
    double mu = nu - nl;
    double mu2 = mu * mu;
    double xi = 1.0 / x, xi2 = 2.0 * xi;

    // CF1: I_{nu+1}/I_nu
    double h = nu * xi;
    if (h < fpmin) h = fpmin;
    double b = xi2 * nu, d = 0.0, c = h;
    int i = 0;
    for (; i < maxit; ++i) {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        double del = c * d;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    if (i == maxit) throw ToleranceNotMet("bessel: CF1 did not converge");

    double ril = fpmin, ripl = h * ril;
    double ril1 = ril;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        double ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
    }
    double f = ripl / ril;

    double rkmu, rk1;
    bool scaled_k;
    if (x < 2.0) {
        double x2 = 0.5 * x;
        double pimu = pi * mu;
        double fct = std::fabs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
        d = -std::log(x2);
        double e = mu * d;
        double fct2 = std::fabs(e) < eps ? 1.0 : std::sinh(e) / e;
        double gam1, gam2, gampl, gammi;
        temme_gammas(mu, gam1, gam2, gampl, gammi);
        double ff = fct * (gam1 * std::cosh(e) + gam2 * fct2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / gampl;
        double q = 0.5 / (e * gammi);
        c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        for (i = 1; i <= maxit; ++i) {
            double di = i;
            ff = (di * ff + p + q) / (di * di - mu2);
            c *= d / di;
            p /= di - mu;
            q /= di + mu;
            double del = c * ff;
            sum += del;
            sum1 += c * (p - di * ff);
            if (std::fabs(del) < std::fabs(sum) * eps) break;
        }
        if (i > maxit) throw ToleranceNotMet("bessel: K series did not converge");
        rkmu = sum;
        rk1 = sum1 * xi2;
        scaled_k = false;
    } else {
        // Steed's CF2, result scaled by e^x
        b = 2.0 * (1.0 + x);
        d = 1.0 / b;
        double hh = d, delh = d;
        double q1 = 0.0, q2 = 1.0;
        double a1 = 0.25 - mu2;
        double q = a1;
        c = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        for (i = 1; i < maxit; ++i) {
            a -= 2 * i;
            c = -a * c / (i + 1.0);
            double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            hh += delh;
            double dels = q * delh;
            s += dels;
            if (std::fabs(dels / s) < eps) break;
        }
        if (i == maxit) throw ToleranceNotMet("bessel: CF2 did not converge");
        hh = a1 * hh;
        rkmu = std::sqrt(pi / (2.0 * x)) / s;
        rk1 = rkmu * (mu + x + 0.5 - hh) * xi;
        scaled_k = true;
    }
    double rkmup = mu * xi * rkmu - rk1;
    double rimu = xi / (f * rkmu - rkmup);
    double ri = rimu * ril1 / ril;
    for (int l = 1; l <= nl; ++l) {
        double rktemp = (mu + l) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    if (!std::isfinite(rkmu)) throw OverflowError("bessel_k: overflow for order " + std::to_string(nu));
    if (scaled_k) return {ri, rkmu};
    double ex = std::exp(x);
    return {ri / ex, rkmu * ex};
}

double bessel_i_series(double nu, double x)
{
    double x2 = 0.5 * x;
    double t = std::pow(x2, nu) * rgamma(nu + 1.0);
    if (!std::isfinite(t)) {
        SignedLog lg = lgamma_signed(nu + 1.0);
        t = lg.sign * std::exp(nu * std::log(x2) - lg.log_abs);
    }
    double q = x2 * x2;
    double sum = t;
    for (int k = 1; k < 1000; ++k) {
        t *= q / (k * (nu + k));
        sum += t;
        if (std::fabs(t) < 1e-17 * std::fabs(sum)) break;
    }
    return sum;
}

double bessel_i_scaled(double nu, double x)
{
    check_x(x, "bessel_i");
    if (nu < 0.0 && is_integer(nu)) nu = -nu;
    if (nu >= 0.0) {
        if (x <= series_limit) return bessel_i_series(nu, x) * std::exp(-x);
        return bessel_ik_scaled(nu, x).i;
    }
    if (nu > -1.0 && x <= series_limit) return bessel_i_series(nu, x) * std::exp(-x);
    ScaledIK ik = bessel_ik_scaled(-nu, x);
    return ik.i + (2.0 / pi) * sin_pi(-nu) * ik.k * std::exp(-2.0 * x);
}

double bessel_k_scaled(double nu, double x)
{
    check_x(x, "bessel_k");
    return bessel_ik_scaled(std::fabs(nu), x).k;
}

Scaled airy_ai_scaled(double x)
{
    check_x(x, "airy_ai");
    if (x < 1e-100) return {0.35502805388781723926, 0.0};
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    return {std::sqrt(x / 3.0) / pi * bessel_k_scaled(1.0 / 3.0, zeta), -zeta};
}

Scaled airy_bi_scaled(double x)
{
    check_x(x, "airy_bi");
    if (x < 1e-100) return {0.61492662744600073515, 0.0};
    double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    double s = bessel_i_scaled(1.0 / 3.0, zeta) + bessel_i_scaled(-1.0 / 3.0, zeta);
    return {std::sqrt(x / 3.0) * s, zeta};
}

} // namespace detail

double bessel_i(double nu, double x)
{
    check_x(x, "bessel_i");
    if (nu < 0.0 && is_integer(nu)) nu = -nu;
    if (nu > -1.0 && x <= series_limit) return detail::bessel_i_series(nu, x);
    if (nu < 0.0) return bessel_i_minus_via_k(-nu, x);
    if (x > 700.0) throw OverflowError("bessel_i: e^x overflows");
    return detail::bessel_ik_scaled(nu, x).i * std::exp(x);
}

double bessel_k(double nu, double x)
{
    check_x(x, "bessel_k");
    double k = detail::bessel_ik_scaled(std::fabs(nu), x).k;
    double v = k * std::exp(-x);
    if (!std::isfinite(v)) throw OverflowError("bessel_k: overflow");
    return v;
}

double bessel_i_minus_via_k(double nu, double x)
{
    check_x(x, "bessel_i_minus_via_k");
    if (nu < 0.0) return bessel_i(-nu, x);
    if (x > 700.0) throw OverflowError("bessel_i: e^x overflows");
    detail::ScaledIK ik = detail::bessel_ik_scaled(nu, x);
    double inu = x <= series_limit ? detail::bessel_i_series(nu, x) : ik.i * std::exp(x);
    return inu + (2.0 / pi) * sin_pi(nu) * ik.k * std::exp(-x);
}

double airy_ai(double x)
{
    detail::Scaled s = detail::airy_ai_scaled(x);
    return s.mant * std::exp(s.expo);
}

double airy_bi(double x)
{
    detail::Scaled s = detail::airy_bi_scaled(x);
    double v = s.mant * std::exp(s.expo);
    if (!std::isfinite(v)) throw OverflowError("airy_bi: overflow");
    return v;
}

} // namespace qb
