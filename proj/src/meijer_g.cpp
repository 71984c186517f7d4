#include "qb/meijer_g.hpp"

#include "qb/errors.hpp"
#include "qb/hypergeometric.hpp"
#include "qb/scalar_special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qb {

namespace {

constexpr double generic_gap = 1e-6;

bool same(double x, double y) { return std::fabs(x - y) <= 1e-14 * std::max(1.0, std::fabs(x)); }

double integer_distance(double x) { return std::fabs(x - std::nearbyint(x)); }

void validate(const MeijerGSpec& s)
{
    if (s.m < 0 || s.n < 0 || s.m > s.q || s.n > s.p || static_cast<int>(s.a.size()) != s.p ||
        static_cast<int>(s.b.size()) != s.q)
        throw DomainError("meijer_g: inconsistent (m,n,p,q) or parameter lengths");
    if (!(s.z > 0.0)) throw DomainError("meijer_g: argument must be positive");
}

} // namespace

MeijerGSpec g_reduce(const MeijerGSpec& s)
{
    validate(s);
    // a_i (i <= n) against b_j (j > m): n and both orders drop by one
    for (int i = 0; i < s.n; ++i)
        for (int j = s.m; j < s.q; ++j)
            if (same(s.a[i], s.b[j])) {
                MeijerGSpec r = s;
                r.a.erase(r.a.begin() + i);
                r.b.erase(r.b.begin() + j);
                --r.n, --r.p, --r.q;
                return r;
            }
    // a_i (i > n) against b_j (j <= m): m and both orders drop by one
    for (int i = s.n; i < s.p; ++i)
        for (int j = 0; j < s.m; ++j)
            if (same(s.a[i], s.b[j])) {
                MeijerGSpec r = s;
                r.a.erase(r.a.begin() + i);
                r.b.erase(r.b.begin() + j);
                --r.m, --r.p, --r.q;
                return r;
            }
    throw NoReduction("g_reduce: no upper parameter cancels a lower one");
}

MeijerGSpec g_reduce_all(const MeijerGSpec& spec)
{
    MeijerGSpec cur = spec;
    for (;;) {
        try {
            cur = g_reduce(cur);
        } catch (const NoReduction&) {
            return cur;
        }
    }
}

std::vector<SlaterTerm> g_slater_terms(const MeijerGSpec& s)
{
    validate(s);
    if (s.p > s.q) throw Unsupported("g_slater: p > q");
    if (s.m == 0) throw DomainError("g_slater: m must be positive");
    for (int h = 0; h < s.m; ++h)
        for (int j = h + 1; j < s.m; ++j)
            if (integer_distance(s.b[j] - s.b[h]) < generic_gap)
                throw NonGenericParameters("g_slater: b" + std::to_string(h + 1) + " and b" + std::to_string(j + 1) +
                                           " differ by an integer");
    for (int h = 0; h < s.m; ++h)
        for (int j = 0; j < s.n; ++j) {
            double d = s.a[j] - s.b[h];
            if (d >= 1.0 - generic_gap && integer_distance(d) < generic_gap)
                throw NonGenericParameters("g_slater: poles of Gamma(b) and Gamma(1-a) coincide");
        }

    double sign_z = ((s.p - s.m - s.n) % 2 == 0) ? 1.0 : -1.0;
    double log_z = std::log(s.z);
    std::vector<SlaterTerm> out;
    out.reserve(s.m);
    for (int h = 0; h < s.m; ++h) {
        double bh = s.b[h];
        double log_abs = bh * log_z;
        int sign = 1;
        bool zero = false;
        for (int j = 0; j < s.m; ++j) {
            if (j == h) continue;
            // Gamma(b_j - b_h) Gamma(1 + b_h - b_j), the second factor moved from the regularized series
            double sn = sin_pi(s.b[j] - bh);
            log_abs += std::log(std::numbers::pi / std::fabs(sn));
            if (sn < 0) sign = -sign;
        }
        for (int j = 0; j < s.n; ++j) {
            SignedLog g = lgamma_signed(1.0 + bh - s.a[j]);
            log_abs += g.log_abs;
            sign *= g.sign;
        }
        for (int j = s.n; j < s.p; ++j) {
            double x = s.a[j] - bh;
            if (x <= 0.0 && x == std::floor(x)) {
                zero = true;
                break;
            }
            SignedLog g = lgamma_signed(x);
            log_abs -= g.log_abs;
            sign *= g.sign;
        }
        if (zero) {
            out.push_back({0.0, 0.0});
            continue;
        }
        HypSeriesSpec hs;
        hs.regularized = true;
        hs.z = sign_z * s.z;
        for (double aj : s.a) hs.a.push_back(1.0 + bh - aj);
        for (int j = 0; j < s.q; ++j)
            if (j != h) hs.b.push_back(1.0 + bh - s.b[j]);
        double pre = sign * std::exp(log_abs);
        if (!std::isfinite(pre)) throw OverflowError("g_slater: prefactor overflow");
        out.push_back({pre, pfq(hs)});
    }
    return out;
}

double g_slater(const MeijerGSpec& spec)
{
    double sum = 0.0;
    for (const auto& t : g_slater_terms(spec)) sum += t.prefactor * t.series;
    return sum;
}

} // namespace qb
