#include "qb/hypergeometric.hpp"

#include "qb/errors.hpp"
#include "qb/scalar_special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qb {

namespace {

constexpr double pi = std::numbers::pi;
constexpr long max_terms = 100000;
constexpr double term_tol = 1e-16;

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// Number of terms before the series stops by itself, or -1.
long terminating_length(const std::vector<double>& a)
{
    long n = -1;
    for (double v : a)
        if (is_nonpositive_integer(v)) {
            long m = static_cast<long>(-v);
            if (n < 0 || m < n) n = m;
        }
    return n;
}

struct Start {
    long k0;
    double t0;
};

// first nonvanishing index and term of sum_k prod(a)_k / prod G(b+k) z^k / k!   (regularized)
// or sum_k prod(a)_k / prod(b)_k z^k / k!
Start series_start(const HypSeriesSpec& s)
{
    long k0 = 0;
    if (s.regularized)
        for (double v : s.b)
            if (is_nonpositive_integer(v)) k0 = std::max(k0, static_cast<long>(1.0 - v));
    double t = 1.0;
    if (k0 > 0) {
        for (double v : s.a) t *= pochhammer(v, k0);
        for (long k = 1; k <= k0; ++k) t *= s.z / static_cast<double>(k);
    }
    if (s.regularized)
        for (double v : s.b) t *= rgamma(v + static_cast<double>(k0));
    return {k0, t};
}

double term_ratio(const HypSeriesSpec& s, long k)
{
    double kk = static_cast<double>(k);
    double r = s.z / (kk + 1.0);
    for (double v : s.a) r *= v + kk;
    for (double v : s.b) r /= v + kk;
    return r;
}

class Levin {
public:
    explicit Levin(std::size_t nmax) : num_(nmax), den_(nmax) {}

    // u-transform with beta = 1; feed partial sum and last term
    double next(std::size_t n, double sum, double term)
    {
        const double beta = 1.0;
        double omega = (beta + static_cast<double>(n)) * term;
        double t = 1.0 / (beta + static_cast<double>(n));
        den_[n] = t / omega;
        num_[n] = sum * den_[n];
        if (n > 0) {
            double ratio = (beta + static_cast<double>(n) - 1.0) * t;
            for (std::size_t j = 1; j <= n; ++j) {
                double fact = (static_cast<double>(n - j) + beta) * t;
                num_[n - j] = num_[n - j + 1] - fact * num_[n - j];
                den_[n - j] = den_[n - j + 1] - fact * den_[n - j];
                t *= ratio;
            }
        }
        return num_[0] / den_[0];
    }

private:
    std::vector<double> num_, den_;
};

SeriesResult sum_direct(const HypSeriesSpec& s, Start st, long stop_after)
{
    const bool balanced = s.a.size() == s.b.size() + 1;
    double sum = st.t0, comp = 0.0, t = st.t0;
    int small = 0;
    long k = st.k0;
    long n = 1;
    for (; n < max_terms; ++n, ++k) {
        if (stop_after >= 0 && k >= stop_after) break;
        double r = term_ratio(s, k);
        t *= r;
        double y = t - comp;
        double tmp = sum + y;
        comp = (tmp - sum) - y;
        sum = tmp;
        if (t == 0.0) break;
        double at = std::fabs(t);
        bool ok = at <= term_tol * std::fabs(sum) && std::fabs(r) < 1.0;
        if (ok && balanced) {
            double rr = std::max(std::fabs(r), std::fabs(s.z));
            ok = at * rr / (1.0 - rr) <= term_tol * std::fabs(sum);
        }
        small = ok ? small + 1 : 0;
        if (small >= 2) break;
        if (!std::isfinite(sum)) throw OverflowError("pfq: partial sum overflow");
    }
    if (n >= max_terms) throw ToleranceNotMet("pfq: 100000 terms insufficient");
    return {sum, n + 1, 1e-15 * std::fabs(sum) + std::numeric_limits<double>::min(), false};
}

SeriesResult sum_levin(const HypSeriesSpec& s, Start st)
{
    const std::size_t nmax = 80;
    Levin lev(nmax);
    double sum = 0.0, t = st.t0;
    double prev = 0.0, best = 0.0, best_gap = std::numeric_limits<double>::infinity();
    long k = st.k0;
    std::size_t n = 0;
    for (; n < nmax; ++n, ++k) {
        if (n > 0) t *= term_ratio(s, k - 1);
        sum += t;
        if (t == 0.0) return {sum, static_cast<long>(n + 1), 0.0, false};
        double est = lev.next(n, sum, t);
        if (n >= 3 && std::isfinite(est)) {
            double gap = std::fabs(est - prev);
            if (gap < best_gap) {
                best_gap = gap;
                best = est;
            }
            // the transform loses digits once the table grows; stop well after the best point
            if (gap <= 1e-16 * std::fabs(est) || gap > 1e4 * best_gap) break;
        }
        prev = est;
    }
    if (!(best_gap <= 1e-9 * std::fabs(best)))
        throw ToleranceNotMet("pfq: accelerated boundary sum did not settle");
    return {best, static_cast<long>(n + 1), best_gap, true};
}

bool connection_ok(const HypSeriesSpec& s)
{
    for (double v : s.a)
        if (is_nonpositive_integer(v)) return false;
    double d = s.b[0] - s.a[0] - s.a[1];
    double off = std::fabs(d - std::round(d));
    return off <= 1e-14 * std::max(1.0, std::fabs(d)) || off > 1e-4;
}

// 2F1(a,b;c;z) for z close to 1 through the 1-z connection formulas
SeriesResult gauss_near_one(double a, double b, double c, double z)
{
    double w = 1.0 - z;
    double lw = std::log(w);
    double d = c - a - b;
    long m = std::lround(d);
    if (std::fabs(d - static_cast<double>(m)) <= 1e-14 * std::max(1.0, std::fabs(d))) {
        if (m < 0) {
            // Euler: (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)
            SeriesResult r = gauss_near_one(c - a, c - b, c, z);
            double f = std::pow(w, d);
            return {r.value * f, r.terms, r.abs_error * f, false};
        }
        double md = static_cast<double>(m);
        double finite = 0.0;
        if (m > 0) {
            double t = gamma(md) * rgamma(a + md) * rgamma(b + md);
            finite = t;
            for (long k = 1; k < m; ++k) {
                double kk = static_cast<double>(k);
                t *= (a + kk - 1.0) * (b + kk - 1.0) * (-w) / (kk * (md - kk));
                finite += t;
            }
        }
        double pre = rgamma(a) * rgamma(b);
        double t = rgamma(md + 1.0);
        double psi1 = -euler_gamma, psi2 = digamma(md + 1.0);
        double psia = digamma(a + md), psib = digamma(b + md);
        double sum = 0.0;
        long k = 0;
        for (; k < max_terms; ++k) {
            double kk = static_cast<double>(k);
            if (k > 0) {
                t *= (a + md + kk - 1.0) * (b + md + kk - 1.0) * w / (kk * (kk + md));
                psi1 += 1.0 / kk;
                psi2 += 1.0 / (kk + md);
                psia += 1.0 / (a + md + kk - 1.0);
                psib += 1.0 / (b + md + kk - 1.0);
            }
            double term = t * (lw - psi1 - psi2 + psia + psib);
            sum += term;
            if (std::fabs(term) <= 1e-17 * std::fabs(sum) && k > 2) break;
        }
        double reg = finite - std::pow(-w, md) * pre * sum;
        double v = reg * gamma(c);
        return {v, k + m + 1, 1e-15 * std::fabs(v) * (1.0 + std::fabs(lw)), false};
    }
    double f1 = gamma(c) * gamma(d) * rgamma(c - a) * rgamma(c - b);
    double f2 = gamma(c) * gamma(-d) * rgamma(a) * rgamma(b) * std::pow(w, d);
    HypSeriesSpec s1{{a, b}, {1.0 - d}, w, true};
    HypSeriesSpec s2{{c - a, c - b}, {1.0 + d}, w, true};
    // regularized pieces absorb the integer-near poles of the lower parameters
    double g1 = f1 * gamma(1.0 - d), g2 = f2 * gamma(1.0 + d);
    SeriesResult r1 = pfq_eval(s1), r2 = pfq_eval(s2);
    double v = g1 * r1.value + g2 * r2.value;
    double err = std::fabs(g1) * r1.abs_error + std::fabs(g2) * r2.abs_error +
                 1e-15 * (std::fabs(g1 * r1.value) + std::fabs(g2 * r2.value));
    return {v, r1.terms + r2.terms, err, false};
}

void validate(const HypSeriesSpec& s)
{
    if (s.a.size() > s.b.size() + 1) throw DomainError("pfq: need p <= q+1");
    if (!std::isfinite(s.z)) throw DomainError("pfq: non-finite argument");
    if (!s.regularized) {
        long term = terminating_length(s.a);
        for (double v : s.b)
            if (is_nonpositive_integer(v) && (term < 0 || term >= static_cast<long>(-v) + 1))
                throw PoleError("pfq: denominator parameter " + std::to_string(v) + " is a nonpositive integer");
    }
}

} // namespace

SeriesResult pfq_eval(const HypSeriesSpec& spec)
{
    validate(spec);
    Start st = series_start(spec);
    if (spec.z == 0.0 || st.t0 == 0.0) {
        double v = spec.scale * (st.k0 == 0 ? st.t0 : 0.0);
        return {v, 1, 0.0, false};
    }
    long term_len = terminating_length(spec.a);
    SeriesResult r;
    if (term_len >= 0) {
        r = sum_direct(spec, st, term_len);
    } else if (spec.a.size() <= spec.b.size()) {
        r = sum_direct(spec, st, -1);
    } else {
        double az = std::fabs(spec.z);
        if (az > 1.0) throw SeriesDivergence("pfq: |z| > 1 with p = q+1");
        double excess = 0.0;
        for (double v : spec.b) excess += v;
        for (double v : spec.a) excess -= v;
        if (az == 1.0) {
            if ((spec.z > 0.0 && excess <= 0.0) || (spec.z < 0.0 && excess <= -1.0))
                throw SeriesDivergence("pfq: boundary series diverges (parameter excess " + std::to_string(excess) + ")");
            r = sum_levin(spec, st);
        } else if (spec.a.size() == 2 && spec.z > 0.9 && connection_ok(spec)) {
            r = gauss_near_one(spec.a[0], spec.a[1], spec.b[0], spec.z);
            if (spec.regularized) {
                r.value *= rgamma(spec.b[0]);
                r.abs_error *= std::fabs(rgamma(spec.b[0]));
            }
        } else {
            double predicted = std::log(1e-17) / std::log(az);
            r = predicted > 90000.0 ? sum_levin(spec, st) : sum_direct(spec, st, -1);
        }
    }
    r.value *= spec.scale;
    r.abs_error *= std::fabs(spec.scale);
    return r;
}

double pfq(const HypSeriesSpec& spec) { return pfq_eval(spec).value; }

HypSeriesSpec pfq_cancel(const HypSeriesSpec& spec)
{
    for (std::size_t i = 0; i < spec.a.size(); ++i) {
        for (std::size_t j = 0; j < spec.b.size(); ++j) {
            if (spec.a[i] != spec.b[j]) continue;
            HypSeriesSpec out = spec;
            out.a.erase(out.a.begin() + static_cast<std::ptrdiff_t>(i));
            out.b.erase(out.b.begin() + static_cast<std::ptrdiff_t>(j));
            if (spec.regularized) out.scale *= rgamma(spec.a[i]);
            return out;
        }
    }
    throw NoCancellation("pfq_cancel: no numerator parameter equals a denominator parameter");
}

double gauss_2f1(double a, double b, double c, double z) { return pfq({{a, b}, {c}, z, false, 1.0}); }

double gauss_2f1_unit(double a, double b, double c)
{
    if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1_unit: c is a nonpositive integer");
    if (!(c - a - b > 0.0)) throw DomainError("gauss_2f1_unit: need c - a - b > 0");
    double r = rgamma(c - a) * rgamma(c - b);
    if (r == 0.0) return 0.0;
    SignedLog g1 = lgamma_signed(c), g2 = lgamma_signed(c - a - b);
    return g1.sign * g2.sign * std::exp(g1.log_abs + g2.log_abs) * r;
}

InversionTerms gauss_2f1_inversion(double a, double b, double c, double z)
{
    if (!(z > 1.0)) throw DomainError("gauss_2f1_inversion: need z > 1");
    double d = a - b;
    if (d == std::round(d)) throw DomainError("gauss_2f1_inversion: a - b is an integer");
    double w = 1.0 / z;
    auto coef = [&](double p, double q) {
        // G(c) G(q-p) / (G(q) G(c-p)) z^{-p} e^{-i pi p}
        double g = gamma(c) * gamma(q - p) * rgamma(q) * rgamma(c - p);
        return g * std::pow(z, -p) * std::complex<double>(cos_pi(p), -sin_pi(p));
    };
    InversionTerms t;
    t.first = coef(a, b) * gauss_2f1(a, a - c + 1.0, a - b + 1.0, w);
    t.second = coef(b, a) * gauss_2f1(b, b - c + 1.0, b - a + 1.0, w);
    return t;
}

double gauss_2f1_log_asymptotic(double a, double b, double z)
{
    if (!(z < 1.0)) throw DomainError("gauss_2f1_log_asymptotic: need z < 1");
    double g = gamma(a + b) * rgamma(a) * rgamma(b);
    return -g * (std::log1p(-z) + digamma(a) + digamma(b) + 2.0 * euler_gamma);
}

double two_arg_atan(double x, double y) { return std::atan2(y, x); }

HypSeriesSpec elementary_2f1_spec(Elementary2F1 kind, double z, int n)
{
    switch (kind) {
    case Elementary2F1::tanh_family: return {{n + 0.5, 1.0}, {n + 1.5}, z};
    case Elementary2F1::log_family: return {{double(n), 1.0}, {n + 1.0}, z};
    case Elementary2F1::sixth_1: return {{1.0 / 6, 1.0}, {7.0 / 6}, z};
    case Elementary2F1::sixth_5: return {{5.0 / 6, 1.0}, {11.0 / 6}, z};
    case Elementary2F1::quarter_1: return {{0.25, 1.0}, {1.25}, z};
    case Elementary2F1::quarter_3: return {{0.75, 1.0}, {1.75}, z};
    }
    throw DomainError("elementary_2f1: unknown kind");
}

double elementary_2f1(Elementary2F1 kind, double z, int n)
{
    if (!(z > 0.0 && z < 1.0)) throw DomainError("elementary_2f1: need 0 < z < 1");
    switch (kind) {
    case Elementary2F1::tanh_family: {
        if (n < 0) throw DomainError("elementary_2f1: tanh family needs n >= 0");
        double r = std::sqrt(z);
        double s = std::atanh(r) / r;
        double zk = 1.0;
        for (int k = 0; k < n; ++k, zk *= z) s -= zk / (2.0 * k + 1.0);
        return (2.0 * n + 1.0) / std::pow(z, n) * s;
    }
    case Elementary2F1::log_family: {
        if (n < 1) throw DomainError("elementary_2f1: log family needs n >= 1");
        double s = -std::log1p(-z);
        double zk = z;
        for (int k = 1; k < n; ++k, zk *= z) s -= zk / k;
        return n / std::pow(z, n) * s;
    }
    case Elementary2F1::sixth_1:
    case Elementary2F1::sixth_5: {
        double z6 = std::pow(z, 1.0 / 6.0), z3 = z6 * z6;
        double sq3 = std::sqrt(3.0);
        double logs = std::log(z3 + z6 + 1.0) - std::log(z3 - z6 + 1.0);
        double ang = 2.0 * sq3 * two_arg_atan(1.0 - z3, sq3 * z6);
        if (kind == Elementary2F1::sixth_1) return (4.0 * std::atanh(z6) + ang + logs) / (12.0 * z6);
        return 5.0 * (4.0 * std::atanh(z6) - ang + logs) / (12.0 * std::pow(z, 5.0 / 6.0));
    }
    case Elementary2F1::quarter_1: {
        double q = std::pow(z, 0.25);
        return (std::atanh(q) + std::atan(q)) / (2.0 * q);
    }
    case Elementary2F1::quarter_3: {
        double q = std::pow(z, 0.25);
        return 3.0 * (std::atanh(q) - std::atan(q)) / (2.0 * q * q * q);
    }
    }
    throw DomainError("elementary_2f1: unknown kind");
}

} // namespace qb
