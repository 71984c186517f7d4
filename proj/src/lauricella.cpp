#include "qb/lauricella.hpp"

#include "qb/errors.hpp"

#include <cmath>
#include <string>

namespace qb {

namespace {

constexpr int max_shell = 400;
constexpr double shell_tol = 1e-15;

void validate(const LauricellaSpec& s)
{
    std::size_t n = s.c.size();
    if (n < 1 || n > 3 || s.z.size() != n) throw DomainError("lauricella_fc: need 1 to 3 variables");
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s.c[i] <= 0.0 && s.c[i] == std::floor(s.c[i]))
            throw DomainError("lauricella_fc: c is a nonpositive integer");
        radius += std::sqrt(std::fabs(s.z[i]));
    }
    if (!(radius < 1.0))
        throw DomainError("lauricella_fc: sum of sqrt|z_i| = " + std::to_string(radius) + " is outside the domain");
}

// Shell sums of prod_i z_i^{k_i}/((c_i)_{k_i} k_i!) over k_1+...+k_n = d.
class Shells {
public:
    explicit Shells(const LauricellaSpec& s) : s_(s), n_(s.c.size()), u_(n_) {}

    long double next()
    {
        int d = static_cast<int>(u_[0].size());
        for (std::size_t i = 0; i < n_; ++i) {
            long double v = d == 0 ? 1.0L : u_[i].back() * s_.z[i] / ((s_.c[i] + d - 1) * static_cast<long double>(d));
            u_[i].push_back(v);
        }
        if (n_ == 1) return u_[0][d];
        // pair convolution of the last two variables
        long double pair = 0.0L;
        const auto& x = u_[n_ - 2];
        const auto& y = u_[n_ - 1];
        for (int k = 0; k <= d; ++k) pair += x[k] * y[d - k];
        if (n_ == 2) return pair;
        pair_.push_back(pair);
        long double sum = 0.0L;
        for (int k = 0; k <= d; ++k) sum += u_[0][k] * pair_[d - k];
        return sum;
    }

private:
    const LauricellaSpec& s_;
    std::size_t n_;
    std::vector<std::vector<long double>> u_;
    std::vector<long double> pair_;
};

} // namespace

LauricellaResult lauricella_fc_eval(const LauricellaSpec& spec)
{
    validate(spec);
    double radius = 0.0;
    for (double z : spec.z) radius += std::sqrt(std::fabs(z));
    Shells shells(spec);
    long double ab = 1.0L, sum = 0.0L;
    int quiet = 0;
    for (int d = 0; d <= max_shell; ++d) {
        if (d > 0) ab *= (static_cast<long double>(spec.a) + d - 1) * (static_cast<long double>(spec.b) + d - 1);
        long double term = ab * shells.next();
        sum += term;
        quiet = std::fabs(static_cast<double>(term)) < shell_tol * std::fabs(static_cast<double>(sum)) ? quiet + 1 : 0;
        if (quiet >= 3 || (ab == 0.0L && d > 0)) {
            double v = static_cast<double>(sum);
            return {v, d + 1, 1e-15 * std::fabs(v) * (d + 1), radius > 0.95};
        }
    }
    throw ToleranceNotMet("lauricella_fc: no convergence by shell " + std::to_string(max_shell));
}

double lauricella_fc(const LauricellaSpec& spec) { return lauricella_fc_eval(spec).value; }

double lauricella_fc_partial(const LauricellaSpec& spec, int count)
{
    validate(spec);
    Shells shells(spec);
    long double ab = 1.0L, sum = 0.0L;
    for (int d = 0; d < count; ++d) {
        if (d > 0) ab *= (static_cast<long double>(spec.a) + d - 1) * (static_cast<long double>(spec.b) + d - 1);
        sum += ab * shells.next();
    }
    return static_cast<double>(sum);
}

} // namespace qb
