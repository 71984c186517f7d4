#include "qb/scalar_special.hpp"

#include "qb/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace qb {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln_sqrt_2pi = 0.91893853320467274178;

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double lanczos_sum(double xm1)
{
    double s = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i) s += lanczos_c[i] / (xm1 + static_cast<double>(i));
    return s;
}

double stirling_correction(double x)
{
    static constexpr std::array<double, 7> c = {1.0 / 12,  -1.0 / 360,          1.0 / 1260, -1.0 / 1680,
                                                 1.0 / 1188, -691.0 / 360360.0, 1.0 / 156};
    double x2 = 1.0 / (x * x);
    double poly = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) poly = poly * x2 + c[i];
    return poly / x;
}

// Gamma(x) for x >= 0.5
double gamma_right(double x)
{
    if (x >= 10.0) {
        double p = std::pow(x, 0.5 * (x - 0.5));
        return std::sqrt(2.0 * pi) * p * (p * std::exp(-x)) * std::exp(stirling_correction(x));
    }
    double xm1 = x - 1.0;
    double t = xm1 + lanczos_g + 0.5;
    double half = 0.5 * (xm1 + 0.5);
    double p = std::pow(t, half);
    return std::sqrt(2.0 * pi) * p * (p * std::exp(-t)) * lanczos_sum(xm1);
}

double lgamma_right(double x)
{
    double xm1 = x - 1.0;
    double t = xm1 + lanczos_g + 0.5;
    return ln_sqrt_2pi + (xm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(xm1));
}

double digamma_asymptotic(double x)
{
    // ln x - 1/(2x) - sum B_2k/(2k x^2k)
    static constexpr std::array<double, 7> c = {1.0 / 12,  -1.0 / 120,      1.0 / 252, -1.0 / 240,
                                                 1.0 / 132, -691.0 / 32760.0, 1.0 / 12};
    double x2 = 1.0 / (x * x);
    double poly = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) poly = poly * x2 + c[i];
    return std::log(x) - 0.5 / x - x2 * poly;
}

double li2_bernoulli(double z)
{
    // Li2(z) = sum_n B_n u^(n+1)/(n+1)!, u = -ln(1-z), valid for |u| < 2 pi
    static constexpr std::array<double, 11> b2k = {1.0 / 6,          -1.0 / 30,        1.0 / 42,
                                                   -1.0 / 30,        5.0 / 66,         -691.0 / 2730,
                                                   7.0 / 6,          -3617.0 / 510,    43867.0 / 798,
                                                   -174611.0 / 330,  854513.0 / 138};
    double u = -std::log1p(-z);
    double u2 = u * u;
    double sum = u - 0.25 * u2;
    double pw = u;       // u^(2k+1)/(2k+1)!
    for (std::size_t k = 1; k <= b2k.size(); ++k) {
        double n = 2.0 * static_cast<double>(k);
        pw *= u2 / (n * (n + 1.0));
        double term = b2k[k - 1] * pw;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

double li2_unit(double z)
{
    // 0 <= z <= 1 or -1 <= z < 0
    if (z == 1.0) return pi * pi / 6.0;
    if (z == 0.0) return 0.0;
    if (z <= 0.5) return li2_bernoulli(z);
    return pi * pi / 6.0 - std::log(z) * std::log1p(-z) - li2_bernoulli(1.0 - z);
}

double li3_direct(double z)
{
    double sum = 0.0;
    double zk = 1.0;
    for (int k = 1; k < 200; ++k) {
        zk *= z;
        double term = zk / (double(k) * k * k);
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

double li3_near_one(double z)
{
    // Li3(e^mu) = zeta(3) + zeta(2) mu + (3/2 - ln(-mu)) mu^2/2 + sum_{k>=3} zeta(3-k) mu^k/k!
    static constexpr std::array<double, 16> zeta_3mk = {
        -0.5,         -1.0 / 12, 0.0, 1.0 / 120, 0.0, -1.0 / 252, 0.0, 1.0 / 240,
        0.0, -1.0 / 132, 0.0, 691.0 / 32760, 0.0, -1.0 / 12,  0.0, 3617.0 / 8160};
    if (z == 1.0) return zeta3;
    double mu = std::log(z);
    double sum = zeta3 + pi * pi / 6.0 * mu + 0.5 * mu * mu * (1.5 - std::log(-mu));
    double pw = 0.5 * mu * mu;
    for (std::size_t i = 0; i < zeta_3mk.size(); ++i) {
        double k = static_cast<double>(i + 3);
        pw *= mu / k;
        sum += zeta_3mk[i] * pw;
    }
    return sum;
}

double li3_positive(double z)
{
    if (z == 0.0) return 0.0;
    return z <= 0.5 ? li3_direct(z) : li3_near_one(z);
}

} // namespace

double sin_pi(double x)
{
    if (x < 0.0) return -sin_pi(-x);
    double r = std::fmod(x, 2.0);
    if (r == 0.0 || r == 1.0) return 0.0;
    if (r > 1.0) return -sin_pi(r - 1.0);
    if (r > 0.5) r = 1.0 - r;
    return std::sin(pi * r);
}

double cos_pi(double x) { return sin_pi(std::fabs(x) + 0.5); }

double gamma(double x)
{
    if (std::isnan(x)) throw DomainError("gamma: NaN argument");
    if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at " + std::to_string(x));
    if (x >= 0.5) {
        if (x > 171.62) throw OverflowError("gamma: overflow at " + std::to_string(x));
        return gamma_right(x);
    }
    double s = sin_pi(x);
    if (1.0 - x > 171.0) {
        SignedLog lg = lgamma_signed(x);
        return lg.sign * std::exp(lg.log_abs);
    }
    double v = pi / (s * gamma_right(1.0 - x));
    if (!std::isfinite(v)) throw OverflowError("gamma: overflow at " + std::to_string(x));
    return v;
}

SignedLog lgamma_signed(double x)
{
    if (std::isnan(x)) throw DomainError("lgamma: NaN argument");
    if (is_nonpositive_integer(x)) throw PoleError("lgamma: pole at " + std::to_string(x));
    if (x >= 0.5) {
        if (x < 20.0) {
            double g = gamma_right(x);
            return {std::log(g), 1};
        }
        return {lgamma_right(x), 1};
    }
    double s = sin_pi(x);
    SignedLog r = lgamma_signed(1.0 - x);
    return {std::log(pi) - std::log(std::fabs(s)) - r.log_abs, s > 0 ? r.sign : -r.sign};
}

double rgamma(double x)
{
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 171.0 || x < -170.0) {
        SignedLog lg = lgamma_signed(x);
        return lg.sign * std::exp(-lg.log_abs);
    }
    if (x < 0.5) return sin_pi(x) * gamma_right(1.0 - x) / pi;
    return 1.0 / gamma_right(x);
}

double digamma(double x)
{
    if (std::isnan(x)) throw DomainError("digamma: NaN argument");
    if (is_nonpositive_integer(x)) throw PoleError("digamma: pole at " + std::to_string(x));
    if (x < 0.5) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(1.0 - x) - pi * cos_pi(x) / sin_pi(x);
    }
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    return acc + digamma_asymptotic(x);
}

double digamma_rational(RationalArg r)
{
    if (r.q < 2 || r.p <= 0 || r.p >= r.q)
        throw DomainError("digamma_rational: need 0 < p < q, got " + std::to_string(r.p) + "/" +
                          std::to_string(r.q));
    double q = static_cast<double>(r.q);
    double p = static_cast<double>(r.p);
    double sum = 0.0;
    for (long k = 1; k < r.q; ++k) {
        double kk = static_cast<double>(k);
        // angles reduced mod q to keep the cosine arguments small
        double c = cos_pi(2.0 * static_cast<double>((k * r.p) % r.q) / q);
        sum += c * std::log(2.0 - 2.0 * cos_pi(2.0 * kk / q));
    }
    return -euler_gamma - std::log(q) - 0.5 * pi * cos_pi(p / q) / sin_pi(p / q) + 0.5 * sum;
}

double psi_half_pair_sum(int m)
{
    if (m < 3) throw DomainError("psi_half_pair_sum: m must be >= 3");
    double md = m;
    double sum = 0.0;
    for (int k = 1; k < 2 * m; ++k) {
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        sum += sgn * cos_pi(2.0 * (k % m) / md) * std::log(2.0 - 2.0 * cos_pi(k / md));
    }
    return -2.0 * euler_gamma - 2.0 * std::log(2.0 * md) + sum;
}

double polylog(int s, double z)
{
    if (s != 2 && s != 3) throw DomainError("polylog: only s = 2, 3 supported");
    if (!(std::fabs(z) <= 1.0)) throw DomainError("polylog: |z| > 1");
    if (s == 2) return li2_unit(z);
    if (z >= 0.0) return li3_positive(z);
    // Li3(-w) = Li3(w^2)/4 - Li3(w)
    double w = -z;
    return 0.25 * li3_positive(w * w) - li3_positive(w);
}

double pochhammer(double v, long k)
{
    if (k < 0) throw DomainError("pochhammer: negative k");
    double r = 1.0;
    for (long i = 0; i < k; ++i) {
        r *= v + static_cast<double>(i);
        if (r == 0.0) return 0.0;
    }
    if (!std::isfinite(r)) throw OverflowError("pochhammer: overflow");
    return r;
}

} // namespace qb
