#include "qb/closed_form.hpp"

#include "closed_form_detail.hpp"
#include "qb/hypergeometric.hpp"
#include "qb/lauricella.hpp"
#include "qb/meijer_g.hpp"
#include "qb/scalar_special.hpp"

#include <numeric>

namespace qb {

using namespace cf;

namespace {

double slater_error(const MeijerGSpec& g)
{
    double err = 0.0, mag = 0.0;
    for (const auto& t : g_slater_terms(g)) mag += std::fabs(t.prefactor * t.series);
    err = 1e-14 * mag;
    return err;
}

} // namespace

EvalResult kk_pair_mellin(double s, double mu, double nu, double a)
{
    require_positive(a, "kk_pair_mellin");
    if (!(s > std::fabs(mu) + std::fabs(nu))) throw DomainError("kk_pair_mellin: need s > |mu| + |nu|");
    double lg = (s - 3.0) * ln2 - s * std::log(a) - lgamma_signed(s).log_abs;
    for (double g : {(s + mu + nu) / 2, (s - mu + nu) / 2, (s + mu - nu) / 2, (s - mu - nu) / 2})
        lg += lgamma_signed(g).log_abs;
    return result(std::exp(lg), "mellin1");
}

EvalResult quartic_k_mellin(double s, double al, double be, double ga, double de, double a, double b)
{
    require_positive(a, "quartic_k_mellin");
    require_positive(b, "quartic_k_mellin");
    if (!(s > std::fabs(al) + std::fabs(be) + std::fabs(ga) + std::fabs(de)))
        throw DomainError("quartic_k_mellin: need s > |al|+|be|+|ga|+|de|");
    if (a > b) {
        std::swap(al, ga);
        std::swap(be, de);
        std::swap(a, b);
    }
    MeijerGSpec g{4,
                  4,
                  6,
                  6,
                  {(2 - ga - de) / 2, (2 + ga - de) / 2, (2 - ga + de) / 2, (2 + ga + de) / 2, s / 2, (s + 1) / 2},
                  {(s + al + be) / 2, (s - al + be) / 2, (s + al - be) / 2, (s - al - be) / 2, 0.5, 1.0},
                  (a / b) * (a / b)};
    double pre = pi / (8.0 * std::pow(a, s));
    EvalResult r = result(pre * g_slater(g), "for1");
    r.est_error += pre * slater_error(g);
    return r;
}

EvalResult quartic_ik3_mellin(double s, double al, double be, double ga, double de, double a, double b)
{
    require_positive(a, "quartic_ik3_mellin");
    require_positive(b, "quartic_ik3_mellin");
    if (!(s > std::fabs(be) + std::fabs(ga) + std::fabs(de) - al))
        throw DomainError("quartic_ik3_mellin: need s > |be|+|ga|+|de|-al");
    if (!(a < b)) throw Unsupported("quartic_ik3_mellin: the expansion needs a < b");
    MeijerGSpec g{2,
                  6,
                  6,
                  6,
                  {(2 - ga - de) / 2, (2 + ga - de) / 2, (2 - ga + de) / 2, (2 + ga + de) / 2, s / 2, (s + 1) / 2},
                  {(s + al + be) / 2, (s + al - be) / 2, (s - al + be) / 2, (s - al - be) / 2, 0.5, 1.0},
                  (a / b) * (a / b)};
    double pre = 1.0 / (8.0 * std::pow(a, s));
    EvalResult r = result(pre * g_slater(g), "k3igen");
    r.est_error += pre * slater_error(g);
    return r;
}

EvalResult quartic_i2k2_mellin(double s, double al, double be, double ga, double de, double a, double b)
{
    require_positive(a, "quartic_i2k2_mellin");
    require_positive(b, "quartic_i2k2_mellin");
    double lam = al + be;
    if (!(s > std::fabs(ga) + std::fabs(de) - lam)) throw DomainError("quartic_i2k2_mellin: need s > |ga|+|de|-al-be");
    if (a > b) throw DomainError("quartic_i2k2_mellin: divergent for a > b");
    if (a == b && !(s < 2.0)) throw DomainError("quartic_i2k2_mellin: a = b needs s < 2");
    HypSeriesSpec h;
    h.a = {(lam + 1) / 2, (lam + 2) / 2, (s + lam + ga + de) / 2, (s + lam - ga + de) / 2, (s + lam + ga - de) / 2,
           (s + lam - ga - de) / 2};
    h.b = {al + 1, be + 1, lam + 1, (s + lam) / 2, (s + lam + 1) / 2};
    h.z = (a / b) * (a / b);
    h.regularized = true;
    double lg = (lam + s) * std::log(a / b) - s * std::log(a) - 2.0 * ln2;
    int sign = 1;
    for (double x : h.a) {
        SignedLog g = lgamma_signed(x);
        lg += g.log_abs;
        sign *= g.sign;
    }
    SeriesResult sr = pfq_eval(h);
    double pre = sign * std::exp(lg);
    EvalResult r = result(pre * sr.value, "iikkgen");
    r.est_error += std::fabs(pre) * sr.abs_error;
    r.diagnostics["series_terms"] = static_cast<double>(sr.terms);
    return r;
}

EvalResult product_i_single_k_mellin(double s, const std::vector<double>& orders, const std::vector<double>& scales,
                                     double beta, double b)
{
    std::size_t n = orders.size();
    if (n < 1 || n > 3 || scales.size() != n) throw DomainError("product_i_single_k_mellin: need 1 to 3 I factors");
    require_positive(b, "product_i_single_k_mellin");
    for (double c : scales) require_positive(c, "product_i_single_k_mellin");
    double sum_scale = std::accumulate(scales.begin(), scales.end(), 0.0);
    double sum_order = std::accumulate(orders.begin(), orders.end(), 0.0);
    if (!(b > sum_scale)) throw DomainError("product_i_single_k_mellin: need b > sum of I scales");
    if (!(s > std::fabs(beta) - sum_order)) throw DomainError("product_i_single_k_mellin: need s > |beta| - sum of orders");
    double A1 = (s + sum_order + beta) / 2, A2 = (s + sum_order - beta) / 2;
    LauricellaSpec fc{A1, A2, {}, {}};
    double lg = (s - 2.0) * ln2 - s * std::log(b);
    int sign = 1;
    for (double g : {A1, A2}) {
        SignedLog l = lgamma_signed(g);
        lg += l.log_abs;
        sign *= l.sign;
    }
    for (std::size_t k = 0; k < n; ++k) {
        lg += orders[k] * std::log(scales[k] / b);
        SignedLog l = lgamma_signed(orders[k] + 1.0);
        lg -= l.log_abs;
        sign *= l.sign;
        fc.c.push_back(orders[k] + 1.0);
        fc.z.push_back((scales[k] / b) * (scales[k] / b));
    }
    LauricellaResult lr = lauricella_fc_eval(fc);
    bool equal_scales = n == 3 && scales[0] == scales[1] && scales[1] == scales[2];
    EvalResult r = result(sign * std::exp(lg) * lr.value, equal_scales ? "lion5" : "thm1.2for", 1e-13);
    r.est_error += std::exp(lg) * lr.abs_error;
    r.diagnostics["shells"] = lr.shells;
    if (lr.near_boundary) r.diagnostics["near_boundary"] = 1.0;
    return r;
}

double hyp_difference_D(double z)
{
    if (!(z > 0.0 && z < 1.0)) throw DomainError("hyp_difference_D: need 0 < z < 1");
    double z6 = std::pow(z, 1.0 / 6.0);
    double r3 = std::sqrt(3.0);
    return 5.0 / (r3 * z6) * std::atan(r3 * z6 / (1.0 - z6 * z6));
}

} // namespace qb
