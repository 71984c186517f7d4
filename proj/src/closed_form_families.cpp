#include "closed_form_detail.hpp"
#include "qb/closed_form.hpp"
#include "qb/hypergeometric.hpp"
#include "qb/scalar_special.hpp"

#include <numeric>

namespace qb {

using namespace cf;

namespace {

double F43(std::vector<double> a, std::vector<double> b, double z, double& err)
{
    SeriesResult r = pfq_eval({std::move(a), std::move(b), z});
    err += r.abs_error;
    return r.value;
}

double F21(double a, double b, double c, double z) { return gauss_2f1(a, b, c, z); }

void need_order(double alpha, double want, const char* who)
{
    if (!near(alpha, want)) throw BranchMismatch(std::string(who) + ": branch needs order " + std::to_string(want));
}

void need_equal(double a, double b, const char* who)
{
    if (a != b) throw BranchMismatch(std::string(who) + ": branch needs a = b");
}

void need_distinct(double a, double b, const char* who)
{
    if (a == b) throw BranchMismatch(std::string(who) + ": branch needs a != b");
}

void window(double alpha, double lo, double hi, const char* who)
{
    if (!(alpha > lo && alpha < hi))
        throw DomainError(std::string(who) + ": order " + std::to_string(alpha) + " outside (" + std::to_string(lo) +
                          ", " + std::to_string(hi) + ")");
}

// psi(p/q) for p, q > 0
double psi_rational(long p, long q)
{
    long g = std::gcd(p, q);
    p /= g;
    q /= g;
    long n = p / q, r = p % q;
    double base, x0;
    if (r == 0) {
        base = -euler_gamma;
        x0 = 1.0;
        --n;
    } else {
        base = digamma_rational({r, q});
        x0 = static_cast<double>(r) / static_cast<double>(q);
    }
    for (long j = 0; j < n; ++j) base += 1.0 / (x0 + static_cast<double>(j));
    return base;
}

const RationalArg* match_order(const std::vector<RationalArg>& table, double alpha)
{
    for (const auto& r : table)
        if (near(alpha, static_cast<double>(r.p) / static_cast<double>(r.q))) return &r;
    return nullptr;
}

double k4_table_value(RationalArg r, double a)
{
    double c = pi * pi / (4.0 * a * a);
    double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    switch (r.q) {
    case 3: return c * std::log(3.0);
    case 4: return c * ln2;
    case 6: return c * std::log(27.0 / 16.0);
    case 8: return c * (2.0 + s2) * (2.0 * ln2 - s2 * acoth(s2));
    case 10: return c / 4.0 * (3.0 + s5) * (std::log(3125.0 / 256.0) - 2.0 * s5 * acoth(s5));
    case 12: return c * (2.0 + s3) * (std::log(108.0) - 4.0 * s3 * acoth(s3));
    }
    throw BranchMismatch("k4_table: order not in the table");
}

double ik3_table_value(RationalArg r, double a)
{
    double c = pi / (8.0 * a * a), sg = r.p > 0 ? -1.0 : 1.0;
    switch (r.q) {
    case 2: return 2.0 * c * ln2;
    case 3: return c * (pi + sg * std::sqrt(3.0) * std::log(3.0));
    case 4: return c * std::sqrt(2.0) / 2.0 * (pi + sg * 2.0 * ln2);
    }
    throw BranchMismatch("ik3_table: order not in the table");
}

} // namespace

const std::vector<RationalArg>& k4_table_orders()
{
    static const std::vector<RationalArg> t{{1, 3}, {1, 4}, {1, 6}, {1, 8}, {1, 10}, {1, 12}};
    return t;
}

const std::vector<RationalArg>& ik3_table_orders()
{
    static const std::vector<RationalArg> t{{1, 2}, {1, 3}, {-1, 3}, {1, 4}, {-1, 4}};
    return t;
}

double k4_table_parent(RationalArg al, double a)
{
    if (!(al.p > 0 && 2 * al.p < al.q)) throw DomainError("k4_table_parent: need 0 < alpha < 1/2");
    // psi(1/2 - p/q) + psi(1/2 + p/q)
    double pair = al.p == 1 && al.q >= 3 ? psi_half_pair_sum(static_cast<int>(al.q))
                                         : psi_rational(al.q - 2 * al.p, 2 * al.q) + psi_rational(al.q + 2 * al.p, 2 * al.q);
    double csc = 1.0 / sin_pi(static_cast<double>(al.p) / static_cast<double>(al.q));
    return -pi * pi / (16.0 * a * a) * csc * csc * (pair + 4.0 * ln2 + 2.0 * euler_gamma);
}

double ik3_table_parent(RationalArg al, double a)
{
    if (!(2 * al.p > -al.q && al.p < al.q) || al.p == 0) throw DomainError("ik3_table_parent: need -1/2 < alpha < 1, alpha != 0");
    double psi = psi_rational(al.q + 2 * al.p, 2 * al.q);
    double csc = 1.0 / sin_pi(static_cast<double>(al.p) / static_cast<double>(al.q));
    return pi / (8.0 * a * a) * csc * (psi + 2.0 * ln2 + euler_gamma);
}

EvalResult k2k2_family(K2K2Branch branch, double al, double a, double b)
{
    require_positive(a, "k2k2_family");
    require_positive(b, "k2k2_family");
    if (a > b) std::swap(a, b);
    double z = a / b;
    switch (branch) {
    case K2K2Branch::slv1: {
        window(al, -0.25, 0.25, "slv1");
        guard(al, {0.0, -0.25, 0.25}, "slv1");
        double err = 0.0, zz = z * z, r = a / (2.0 * b), csc = 1.0 / sin_pi(al);
        double t1 = csc * gamma(2 * al + 0.5) / (gamma(0.5 - al) * std::pow(gamma(1 + al), 3)) * std::pow(r, 2 * al) *
                    F43({0.5, al + 0.5, al + 0.5, 2 * al + 0.5}, {2 * al + 1, al + 1, al + 1}, zz, err);
        double t2 = csc * gamma(0.5 - 2 * al) / (gamma(al + 0.5) * std::pow(gamma(1 - al), 3)) * std::pow(r, -2 * al) *
                    F43({0.5, 0.5 - 2 * al, 0.5 - al, 0.5 - al}, {1 - 2 * al, 1 - al, 1 - al}, zz, err);
        double t3 = -2.0 / (pi * al) * F43({0.5, 0.5, al + 0.5, 0.5 - al}, {1, 1 - al, al + 1}, zz, err);
        double pre = std::pow(pi, 4) / (8.0 * b) / sin_pi(2 * al);
        EvalResult res = result(pre * (t1 + t2 + t3), "slv1");
        res.est_error += std::fabs(pre) * (1e-15 * (std::fabs(t1) + std::fabs(t2) + std::fabs(t3)) + err);
        return res;
    }
    case K2K2Branch::forab: {
        window(al, -0.5, 0.5, "forab");
        guard(al, {0.0}, "forab");
        need_distinct(a, b, "forab");
        double zz = z * z, csc = 1.0 / sin_pi(al);
        double t1 = std::pow(z, 2 + 2 * al) / (1 + 2 * al) * F21(1, 0.5 + al, 1.5 + al, zz);
        double t2 = std::pow(z, 2 - 2 * al) / (1 - 2 * al) * F21(1, 0.5 - al, 1.5 - al, zz);
        double t3 = -2.0 * z * std::atanh(z);
        double pre = pi * pi / (8.0 * a * a) * csc * csc;
        EvalResult res = result(pre * (t1 + t2 + t3), "forab");
        res.est_error += pre * 1e-14 * (std::fabs(t1) + std::fabs(t2) + std::fabs(t3));
        return res;
    }
    case K2K2Branch::foraa: {
        window(al, -0.5, 0.5, "foraa");
        guard(al, {0.0}, "foraa");
        need_equal(a, b, "foraa");
        double csc = 1.0 / sin_pi(al);
        double psi = digamma(0.5 - al) + digamma(0.5 + al);
        return result(-pi * pi / (16.0 * a * a) * csc * csc * (psi + 4.0 * ln2 + 2.0 * euler_gamma), "foraa");
    }
    case K2K2Branch::li2: {
        need_order(al, 0.0, "li2");
        need_distinct(a, b, "li2");
        double l = std::log(z);
        double v = l * l * std::atanh(z) - l * (polylog(2, z) - polylog(2, -z)) + polylog(3, z) - polylog(3, -z);
        return result(v / (2.0 * a * b), "li2");
    }
    case K2K2Branch::fox1:
        need_order(al, 0.0, "fox1");
        need_equal(a, b, "fox1");
        return result(7.0 * zeta3 / (8.0 * a * a), "fox1");
    case K2K2Branch::kab13: {
        need_order(al, 1.0 / 3.0, "kab13");
        double ca = std::cbrt(a), cb = std::cbrt(b);
        return result(pi * pi / (2.0 * a * b) * std::atanh(ca * cb / (ca * ca + cb * cb)), "kab13");
    }
    case K2K2Branch::quarter_coth: {
        need_order(al, 0.25, "quarter_coth");
        double r = std::sqrt(z);
        return result(pi * pi / (2.0 * a * b) * acoth(r + 1.0 + 1.0 / r), "k14coth");
    }
    case K2K2Branch::k4_table: {
        need_equal(a, b, "k4_table");
        const RationalArg* r = match_order(k4_table_orders(), std::fabs(al));
        if (!r) throw BranchMismatch("k4_table: order not in the table");
        EvalResult res = result(k4_table_value(*r, a), "k4-table");
        res.diagnostics["parent"] = k4_table_parent(*r, a);
        return res;
    }
    }
    throw BranchMismatch("k2k2_family: unknown branch");
}

EvalResult ikk2_family(IKK2Branch branch, double al, double a, double b)
{
    require_positive(a, "ikk2_family");
    require_positive(b, "ikk2_family");
    double z = a / b;
    switch (branch) {
    case IKK2Branch::sch1: {
        window(al, -0.25, 0.5, "sch1");
        guard(al, {0.0, -0.25, 0.5}, "sch1");
        if (a > b) throw Unsupported("sch1: the series needs a <= b");
        double err = 0.0, zz = z * z;
        double t1 = 1.0 / (cos_pi(al) * al) * F43({0.5, 0.5, al + 0.5, 0.5 - al}, {1, al + 1, 1 - al}, zz, err);
        double t2 = -gamma(al + 0.5) * gamma(2 * al + 0.5) / (sin_pi(al) * std::pow(gamma(al + 1), 3)) *
                    std::pow(a / (2.0 * b), 2 * al) *
                    F43({0.5, al + 0.5, al + 0.5, 2 * al + 0.5}, {al + 1, al + 1, 2 * al + 1}, zz, err);
        double pre = pi * pi / (8.0 * b);
        EvalResult res = result(pre * (t1 + t2), "sch1");
        res.est_error += pre * (1e-15 * (std::fabs(t1) + std::fabs(t2)) + err);
        return res;
    }
    case IKK2Branch::forab2: {
        window(al, -0.5, 1.0, "forab2");
        guard(al, {0.0}, "forab2");
        need_distinct(a, b, "forab2");
        double t1, t2;
        if (z < 1.0) {
            t1 = std::atanh(z) / z;
            t2 = std::pow(z, 2 * al) / (1 + 2 * al) * F21(1, 0.5 + al, 1.5 + al, z * z);
        } else {
            // real parts of the continuation past z = 1
            t1 = std::atanh(1.0 / z) / z;
            t2 = std::pow(z, 2 * al) / (1 + 2 * al) * gauss_2f1_inversion(1, 0.5 + al, 1.5 + al, z * z).sum().real();
        }
        double pre = pi / (4.0 * b * b * sin_pi(al));
        EvalResult res = result(pre * (t1 - t2), "forab2");
        res.est_error += std::fabs(pre) * 1e-14 * (std::fabs(t1) + std::fabs(t2));
        return res;
    }
    case IKK2Branch::foraa2: {
        window(al, -0.5, 1.0, "foraa2");
        guard(al, {0.0}, "foraa2");
        need_equal(a, b, "foraa2");
        return result(pi / (8.0 * a * a * sin_pi(al)) * (digamma(0.5 + al) + 2.0 * ln2 + euler_gamma), "foraa2");
    }
    case IKK2Branch::lili: {
        need_order(al, 0.0, "lili");
        if (!(a < b)) throw BranchMismatch("lili: branch needs a < b");
        double v = polylog(2, z) - polylog(2, -z) - 2.0 * std::log(z) * std::atanh(z);
        return result(v / (4.0 * a * b), "lili");
    }
    case IKK2Branch::lilix: {
        need_order(al, 0.0, "lilix");
        if (!(a > b)) throw BranchMismatch("lilix: branch needs a > b");
        double w = b / a;
        double v = pi * pi / 2.0 - polylog(2, w) + polylog(2, -w) + 2.0 * std::log(w) * std::atanh(w);
        return result(v / (4.0 * a * b), "lilix");
    }
    case IKK2Branch::fox2:
        need_order(al, 0.0, "fox2");
        need_equal(a, b, "fox2");
        return result(pi * pi / (16.0 * a * a), "fox2");
    case IKK2Branch::elementary: {
        if (near(al, 0.5)) return result(pi / (4.0 * a * b) * std::log1p(z), "ik-elementary");
        double r = std::sqrt(z), c = pi * std::sqrt(2.0) / (4.0 * a * b);
        // the coth form stays real on both sides of a = b
        if (near(al, 0.25)) return result(c * (std::atan(r) - acoth(r + 1.0 + 1.0 / r)), "ik-elementary");
        if (near(al, -0.25)) return result(c * (std::atan(r) + acoth(r + 1.0 + 1.0 / r)), "ik-elementary");
        throw BranchMismatch("ik-elementary: order must be 1/2, 1/4 or -1/4");
    }
    case IKK2Branch::ik3_table: {
        need_equal(a, b, "ik3_table");
        const RationalArg* r = match_order(ik3_table_orders(), al);
        if (!r) throw BranchMismatch("ik3_table: order not in the table");
        EvalResult res = result(ik3_table_value(*r, a), "ik3-table");
        res.diagnostics["parent"] = ik3_table_parent(*r, a);
        return res;
    }
    }
    throw BranchMismatch("ikk2_family: unknown branch");
}

EvalResult i2k2_family(I2K2Branch branch, double al, double a, double b)
{
    require_positive(a, "i2k2_family");
    require_positive(b, "i2k2_family");
    if (a > b) throw DomainError("i2k2_family: divergent for a > b");
    double z = a / b, zz = z * z;
    switch (branch) {
    case I2K2Branch::haw: {
        if (!(al > -0.25)) throw DomainError("haw: order must exceed -1/4");
        double err = 0.0;
        double f = F43({al + 0.5, 2 * al + 0.5, al + 0.5, 0.5}, {al + 1, 2 * al + 1, al + 1}, zz, err);
        double pre = pi / (4.0 * b) * std::pow(a / (2.0 * b), 2 * al) * gamma(al + 0.5) * gamma(2 * al + 0.5) /
                     std::pow(gamma(al + 1), 3);
        EvalResult res = result(pre * f, "haw");
        res.est_error += std::fabs(pre) * err;
        return res;
    }
    case I2K2Branch::gauss_ab:
        if (!(al > -0.5)) throw DomainError("2f1ab: order must exceed -1/2");
        if (!(a < b)) throw DomainError("2f1ab: needs a < b");
        return result(std::pow(z, 2 * al) / (2.0 * b * b * (1 + 2 * al)) * F21(al + 0.5, 1, al + 1.5, zz), "2f1ab");
    case I2K2Branch::integer_order: {
        long n = std::lround(al);
        if (n < 0 || !near(al, static_cast<double>(n))) throw BranchMismatch("integer_order: order must be 0, 1, 2, ...");
        if (!(a < b)) throw DomainError("integer_order: needs a < b");
        double sum = 0.0;
        for (long k = 0; k < n; ++k) sum += std::pow(z, 2 * k) / (2 * k + 1);
        return result((std::atanh(z) / z - sum) / (2.0 * b * b), "i2k2-integer", 1e-13);
    }
    case I2K2Branch::half_integer_order: {
        long n = std::lround(al - 0.5);
        if (n < 0 || !near(al, n + 0.5)) throw BranchMismatch("half_integer_order: order must be 1/2, 3/2, ...");
        if (!(a < b)) throw DomainError("half_integer_order: needs a < b");
        double sum = 0.0;
        for (long k = 1; k <= n; ++k) sum += std::pow(z, 2 * k) / static_cast<double>(k);
        return result((-std::log1p(-zz) - sum) / (4.0 * a * b), "i2k2-half", 1e-13);
    }
    case I2K2Branch::ox1: {
        need_order(al, 0.0, "ox1");
        double err = 0.0;
        double pre = pi * pi / (4.0 * a * b);
        EvalResult res = result(pre * F43({0.5, 0.5, 0.5, 0.5}, {1, 1, 1}, zz, err), "ox1");
        res.est_error += pre * err;
        // the central-binomial form of the same series
        double q = (a / (16.0 * b)) * (a / (16.0 * b)), t = 1.0, sum = 1.0;
        int k = 0;
        for (; k < 100000 && t > 1e-17 * sum; ++k) {
            double r = 2.0 * (2 * k + 1) / (k + 1.0);
            t *= r * r * r * r * q;
            sum += t;
        }
        res.diagnostics["ox2_sum"] = pre * sum;
        res.diagnostics["ox2_terms"] = k + 1;
        return res;
    }
    }
    throw BranchMismatch("i2k2_family: unknown branch");
}

} // namespace qb
