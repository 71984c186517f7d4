#include "qb/quadrature.hpp"

#include "qb/bessel_airy.hpp"
#include "qb/errors.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

namespace qb {

namespace {

constexpr double half_pi = 0.5 * std::numbers::pi;
constexpr double x_floor = 1e-300;

// Accumulates mant * 2^bin * exp(expo) without intermediate overflow.
struct Product {
    double mant = 1.0;
    long bin = 0;
    double expo = 0.0;

    void mul(double v)
    {
        int e = 0;
        mant = std::frexp(mant * v, &e);
        bin += e;
    }
    void mul_pow(double x, double p)
    {
        if (p == 0.0) return;
        double v = std::pow(x, p);
        if (std::isfinite(v) && v != 0.0)
            mul(v);
        else
            expo += p * std::log(x);
    }
    double value() const
    {
        if (mant == 0.0) return 0.0;
        double e = expo + static_cast<double>(bin) * std::numbers::ln2;
        if (std::fabs(expo) < 600.0 && std::abs(bin) < 900) return std::ldexp(mant * std::exp(expo), static_cast<int>(bin));
        return mant * std::exp(e);
    }
};

template <class F, class Eval>
void for_each_group(const std::vector<F>& factors, Eval eval)
{
    std::vector<bool> done(factors.size(), false);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (done[i]) continue;
        int count = 0;
        for (std::size_t j = i; j < factors.size(); ++j)
            if (!done[j] && factors[j] == factors[i]) {
                done[j] = true;
                ++count;
            }
        eval(factors[i], count);
    }
}

struct Envelope {
    double rate = 0.0;  // exponential rate in x (Bessel) or x^{3/2} (Airy)
    double power = 0.0; // algebraic exponent
    bool airy = false;
    double length = 1.0; // natural length scale of the decay
};

Envelope envelope(const IntegralSpec& s)
{
    Envelope e;
    int n = 0;
    for (const auto& f : s.factors) {
        e.rate += f.kind == BesselKind::K ? f.scale.value : -f.scale.value;
        ++n;
    }
    if (e.rate < 1e-14) e.rate = 0.0;
    e.power = s.s.value - 1.0 - 0.5 * n;
    e.length = e.rate > 0.0 ? 1.0 / e.rate : 1.0;
    return e;
}

Envelope envelope(const AirySpec& s)
{
    Envelope e;
    e.airy = true;
    double d = 0.0;
    for (const auto& f : s.factors) {
        double c = std::pow(f.scale.value, 1.5);
        d += f.kind == AiryKind::Ai ? c : -c;
    }
    e.rate = 2.0 / 3.0 * d;
    e.power = s.s.value - 1.0 - 0.25 * static_cast<double>(s.factors.size());
    e.length = std::pow(e.rate, -2.0 / 3.0);
    return e;
}

// bound on the integral of the envelope from x to infinity given |f(x)|; safety factor 2
double tail_estimate(const Envelope& e, double x, double fx)
{
    double af = std::fabs(fx);
    if (af == 0.0) return 0.0;
    double denom;
    if (e.rate == 0.0)
        denom = (-e.power - 1.0) / x;
    else if (e.airy)
        denom = 1.5 * e.rate * std::sqrt(x) - std::max(e.power, 0.0) / x;
    else
        denom = e.rate - std::max(e.power, 0.0) / x;
    if (!(denom > 0.0)) return std::numeric_limits<double>::infinity();
    return 2.0 * af / denom;
}

// lower exponent of the integrand near 0, used for the x -> 0 remainder
double small_x_power(const IntegralSpec& s)
{
    double p = s.s.value;
    for (const auto& f : s.factors) {
        double nu = f.order.value;
        if (f.kind == BesselKind::K)
            p -= std::fabs(nu);
        else
            p += (nu < 0.0 && nu == std::floor(nu)) ? -nu : nu;
    }
    return p;
}

double small_x_power(const AirySpec& s) { return s.s.value; }

struct Sweep {
    double sum = 0.0;
    long evals = 0;
    double x_low = 0.0;  // smallest abscissa used
    double f_low = 0.0;
    double x_high = 0.0; // largest abscissa used
    double f_high = 0.0;
    bool clipped = false;
};

class Integrator {
public:
    Integrator(std::function<double(double)> f, Envelope env, double low_power, const QuadratureOptions& o)
        : f_(std::move(f)), env_(env), low_power_(low_power), o_(o)
    {
    }

    QuadratureResult run()
    {
        QuadratureResult r;
        double prev = 0.0;
        double left = 0.0, right = 0.0;
        Sweep lt{}, rt{};
        for (int level = 0; level <= o_.max_levels; ++level) {
            double h = std::ldexp(1.0, -level);
            Sweep a = left_sweep(h, level == 0);
            Sweep b = right_sweep(h, level == 0);
            left = level == 0 ? h * a.sum : 0.5 * left + h * a.sum;
            right = level == 0 ? h * b.sum : 0.5 * right + h * b.sum;
            r.evaluations += a.evals + b.evals;
            merge(lt, a);
            merge(rt, b);
            double value = left + right;
            double tail = tail_estimate(env_, rt.x_high, rt.f_high);
            if (rt.clipped) tail = tail_estimate(env_, o_.upper_limit, f_(o_.upper_limit));
            double low_tail = low_power_ > 0.0 ? std::fabs(lt.f_low) * lt.x_low / low_power_ : 0.0;
            r.value = value;
            r.tail_bound = tail + low_tail;
            r.truncation_point = rt.clipped ? o_.upper_limit : rt.x_high;
            r.levels = level + 1;
            if (level > 0) {
                double delta = std::fabs(value - prev);
                r.level_deltas.push_back(delta);
                r.err_estimate = delta + r.tail_bound;
                if (level >= 3 && r.err_estimate <= std::max(o_.rel_tol * std::fabs(value), o_.abs_tol)) return r;
            }
            prev = value;
        }
        char msg[160];
        std::snprintf(msg, sizeof msg, "integrate: error estimate %.3e for value %.17g after %d levels", r.err_estimate,
                      r.value, o_.max_levels);
        throw ToleranceNotMet(msg);
    }

private:
    static void merge(Sweep& acc, const Sweep& s)
    {
        if (s.x_low > 0.0 && (acc.x_low == 0.0 || s.x_low < acc.x_low)) {
            acc.x_low = s.x_low;
            acc.f_low = s.f_low;
        }
        if (s.x_high > acc.x_high) {
            acc.x_high = s.x_high;
            acc.f_high = s.f_high;
        }
        acc.clipped = acc.clipped || s.clipped;
    }

    // Walks t = +-k h (odd k only after level 0) outward until terms vanish.
    template <class Node>
    Sweep sweep(double h, bool all, Node node)
    {
        Sweep out;
        int step = all ? 1 : 2;
        for (int dir : {-1, 1}) {
            int start = all ? (dir < 0 ? 0 : 1) : 1;
            int quiet = 0;
            for (int k = start;; k += step) {
                double t = dir * k * h;
                if (std::fabs(t) > 7.0) break;
                double x, w;
                if (!node(t, x, w)) break;
                if (x > o_.upper_limit) {
                    out.clipped = true;
                    break;
                }
                double fx = f_(x);
                ++out.evals;
                double term = w * fx;
                out.sum += term;
                if (out.x_low == 0.0 || x < out.x_low) {
                    out.x_low = x;
                    out.f_low = fx;
                }
                if (x > out.x_high) {
                    out.x_high = x;
                    out.f_high = fx;
                }
                quiet = std::fabs(term) <= 1e-20 * std::fabs(out.sum) || term == 0.0 ? quiet + 1 : 0;
                if (quiet >= 2 && std::fabs(t) > 1.0) break;
            }
        }
        return out;
    }

    // tanh-sinh on (0, split]
    Sweep left_sweep(double h, bool all)
    {
        double L = o_.split_point;
        return sweep(h, all, [L](double t, double& x, double& w) {
            double u = half_pi * std::sinh(t);
            double e = std::exp(-2.0 * std::fabs(u));
            double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
            x = u >= 0.0 ? L / (1.0 + e) : L * e / (1.0 + e);
            w = L * half_pi * std::cosh(t) * 0.5 * sech2;
            return x > x_floor && w > 0.0;
        });
    }

    // exp-sinh on [split, inf)
    Sweep right_sweep(double h, bool all)
    {
        double L = o_.split_point, len = env_.length;
        // past this point the exponential envelope is below the smallest double
        double cap = env_.rate > 0.0 ? L + 800.0 * len : 1e100;
        return sweep(h, all, [L, len, cap](double t, double& x, double& w) {
            double g = half_pi * std::sinh(t);
            if (g > 700.0) return false;
            double e = len * std::exp(g);
            x = L + e;
            if (x > cap) return false;
            w = e * half_pi * std::cosh(t);
            return std::isfinite(x) && w > 0.0 && e > 1e-300;
        });
    }

    std::function<double(double)> f_;
    Envelope env_;
    double low_power_;
    QuadratureOptions o_;
};

} // namespace

double integrand(const IntegralSpec& spec, double x)
{
    if (!(x > 0.0)) throw DomainError("integrand: x must be positive");
    Product p;
    p.mul_pow(x, spec.s.value - 1.0);
    for_each_group(spec.factors, [&](const BesselFactor& f, int count) {
        double z = f.scale.value * x;
        double m;
        if (f.kind == BesselKind::K) {
            m = detail::bessel_k_scaled(f.order.value, z);
            p.expo -= count * z;
        } else {
            m = detail::bessel_i_scaled(f.order.value, z);
            p.expo += count * z;
        }
        for (int i = 0; i < count; ++i) p.mul(m);
    });
    return p.value();
}

double integrand(const AirySpec& spec, double x)
{
    if (!(x > 0.0)) throw DomainError("integrand: x must be positive");
    Product p;
    p.mul_pow(x, spec.s.value - 1.0);
    for_each_group(spec.factors, [&](const AiryFactor& f, int count) {
        double z = f.scale.value * x;
        detail::Scaled v = f.kind == AiryKind::Ai ? detail::airy_ai_scaled(z) : detail::airy_bi_scaled(z);
        for (int i = 0; i < count; ++i) p.mul(v.mant);
        p.expo += count * v.expo;
    });
    return p.value();
}

double integrand(const AnySpec& spec, double x)
{
    return std::visit([x](const auto& s) { return integrand(s, x); }, spec);
}

QuadratureResult integrate(const AnySpec& spec, const QuadratureOptions& opts)
{
    if (!(opts.rel_tol > 0.0) || !(opts.abs_tol > 0.0)) throw DomainError("integrate: tolerances must be positive");
    if (opts.max_levels < 1 || opts.max_levels > 16) throw DomainError("integrate: max_levels must be in [1, 16]");
    if (!(opts.split_point > 0.0)) throw DomainError("integrate: split point must be positive");
    if (!(opts.upper_limit > opts.split_point)) throw DomainError("integrate: upper limit must exceed the split point");
    Verdict v = check_convergence(spec);
    if (!v) throw DivergentSpec("integrate: " + v.reason);
    return std::visit(
        [&](const auto& s) {
            auto f = [&s](double x) { return integrand(s, x); };
            Integrator in(f, envelope(s), small_x_power(s), opts);
            return in.run();
        },
        spec);
}

} // namespace qb
