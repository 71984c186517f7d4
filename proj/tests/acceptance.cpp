#include "qb/bessel_airy.hpp"
#include "qb/closed_form.hpp"
#include "qb/errors.hpp"
#include "qb/hypergeometric.hpp"
#include "qb/meijer_g.hpp"
#include "qb/quadrature.hpp"
#include "qb/scalar_special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using namespace qb;

namespace {

constexpr double pi = std::numbers::pi;

// Every tolerance used below.
namespace tol {
constexpr double three_way = 1e-9;
constexpr double table_oracle = 1e-9;
constexpr double table_parent = 1e-12;
constexpr double elementary = 1e-9;
constexpr double polylog_forms = 1e-9;
constexpr double meijer = 1e-7;
constexpr double hyp65 = 1e-8;
constexpr double specialization = 1e-10;
constexpr double lauricella_n1 = 1e-9;
constexpr double lauricella_n2 = 1e-9;
constexpr double lauricella_n3 = 1e-6;
constexpr double airy_limits = 1e-9;
constexpr double airy_pairs = 1e-8;
constexpr double airy_lion3 = 1e-5;
constexpr double s57_lion = 1e-10;
constexpr double ladder = 1e-3;
constexpr double gamma_recurrence = 1e-12;
constexpr double gamma_identities = 1e-11;
constexpr double digamma = 1e-11;
constexpr double bessel_wronskian = 1e-9;
constexpr double airy_wronskian = 1e-8;
constexpr double ikrel = 1e-11;
constexpr double elementary_2f1 = 1e-11;
constexpr double lemma_d = 1e-11;
constexpr double slater_reduction = 1e-11;
constexpr double oracle_rel = 1e-12; // quadrature target
} // namespace tol

BesselFactor K(double nu, double c = 1.0) { return {BesselKind::K, nu, c}; }
BesselFactor I(double nu, double c = 1.0) { return {BesselKind::I, nu, c}; }
AiryFactor Ai(double c = 1.0) { return {AiryKind::Ai, c}; }
AiryFactor Bi(double c = 1.0) { return {AiryKind::Bi, c}; }

double rel(double got, double want) { return std::fabs(got - want) / std::max(std::fabs(want), 1e-300); }

double oracle(const AnySpec& spec)
{
    QuadratureOptions o;
    o.rel_tol = tol::oracle_rel;
    o.abs_tol = 1e-300;
    o.max_levels = 14;
    return integrate(spec, o).value;
}

// Tracks the worst relative gap of a group of comparisons against one tolerance.
class Check {
public:
    void operator()(const std::string& what, double got, double want, double limit)
    {
        double g = rel(got, want);
        if (!(g <= limit)) {
            ok_ = false;
            if (!failures_.empty()) failures_ += "; ";
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s gap %.2e > %.0e", what.c_str(), g, limit);
            failures_ += buf;
        }
        if (g > worst_ || std::isnan(g)) worst_ = g;
    }
    void fail(const std::string& why)
    {
        ok_ = false;
        failures_ += why;
    }
    bool ok() const { return ok_; }
    std::string summary() const
    {
        char buf[48];
        std::snprintf(buf, sizeof buf, "worst rel gap %.2e", worst_);
        return ok_ ? std::string(buf) : failures_;
    }

private:
    bool ok_ = true;
    double worst_ = 0.0;
    std::string failures_;
};

IntegralSpec k2k2(double s, double al, double a, double b) { return {s, {K(al, a), K(al, a), K(al, b), K(al, b)}}; }
IntegralSpec ikk2(double s, double al, double a, double b) { return {s, {I(al, a), K(al, a), K(al, b), K(al, b)}}; }

void fox1(Check& c)
{
    double cf = k2k2_family(K2K2Branch::fox1, 0, 1, 1).value, q = oracle(k2k2(2, 0, 1, 1)), k = 7 * zeta3 / 8;
    c("closed/oracle", cf, q, tol::three_way);
    c("closed/constant", cf, k, tol::three_way);
    c("oracle/constant", q, k, tol::three_way);
}

void fox2(Check& c)
{
    double cf = ikk2_family(IKK2Branch::fox2, 0, 1, 1).value, q = oracle(ikk2(2, 0, 1, 1)), k = pi * pi / 16;
    c("closed/oracle", cf, q, tol::three_way);
    c("closed/constant", cf, k, tol::three_way);
    c("oracle/constant", q, k, tol::three_way);
}

void k4_table(Check& c)
{
    const double printed[] = {pi * pi * std::log(3.0) / 4, pi * pi * std::log(2.0) / 4, pi * pi * std::log(27.0 / 16) / 4};
    int i = 0;
    for (RationalArg r : k4_table_orders()) {
        double al = double(r.p) / double(r.q);
        std::string tag = "alpha=" + std::to_string(r.p) + "/" + std::to_string(r.q);
        EvalResult t = k2k2_family(K2K2Branch::k4_table, al, 1, 1);
        c(tag + " oracle", t.value, oracle(k2k2(2, al, 1, 1)), tol::table_oracle);
        c(tag + " digamma parent", t.value, k4_table_parent(r, 1), tol::table_parent);
        if (i < 3) c(tag + " printed", t.value, printed[i], tol::table_parent);
        ++i;
    }
    if (i != 6) c.fail("expected six K^4 entries");
}

void ik3_table(Check& c)
{
    int i = 0;
    for (RationalArg r : ik3_table_orders()) {
        double al = double(r.p) / double(r.q);
        std::string tag = "alpha=" + std::to_string(r.p) + "/" + std::to_string(r.q);
        EvalResult t = ikk2_family(IKK2Branch::ik3_table, al, 1, 1);
        c(tag + " oracle", t.value, oracle(ikk2(2, al, 1, 1)), tol::table_oracle);
        c(tag + " digamma parent", t.value, ik3_table_parent(r, 1), tol::table_parent);
        ++i;
    }
    c("alpha=1/2 printed", ikk2_family(IKK2Branch::ik3_table, 0.5, 1, 1).value, pi * std::log(2.0) / 4, tol::table_parent);
    if (i != 5) c.fail("expected five IK^3 entries");
}

void mixed_elementary(Check& c)
{
    c("kab13 (1,2)", k2k2_family(K2K2Branch::kab13, 1.0 / 3, 1, 2).value, oracle(k2k2(2, 1.0 / 3, 1, 2)), tol::elementary);
    c("kab13 (1,3)", k2k2_family(K2K2Branch::kab13, 1.0 / 3, 1, 3).value, oracle(k2k2(2, 1.0 / 3, 1, 3)), tol::elementary);
    c("K^{1/4} coth (1,2)", k2k2_family(K2K2Branch::quarter_coth, 0.25, 1, 2).value, oracle(k2k2(2, 0.25, 1, 2)),
      tol::elementary);
    for (double al : {0.5, 0.25, -0.25})
        c("IKK^2 alpha=" + std::to_string(al), ikk2_family(IKK2Branch::elementary, al, 1, 2).value,
          oracle(ikk2(2, al, 1, 2)), tol::elementary);
}

void polylog_forms(Check& c)
{
    c("li2 (1,2)", k2k2_family(K2K2Branch::li2, 0, 1, 2).value, oracle(k2k2(2, 0, 1, 2)), tol::polylog_forms);
    c("lili (1,2)", ikk2_family(IKK2Branch::lili, 0, 1, 2).value, oracle(ikk2(2, 0, 1, 2)), tol::polylog_forms);
    c("lilix (2,1)", ikk2_family(IKK2Branch::lilix, 0, 2, 1).value, oracle(ikk2(2, 0, 2, 1)), tol::polylog_forms);
}

void meijer_path(Check& c)
{
    c("for1", quartic_k_mellin(1.3, 0.21, 0.17, 0.11, 0.07, 1, 2).value,
      oracle(IntegralSpec{1.3, {K(0.21), K(0.17), K(0.11, 2), K(0.07, 2)}}), tol::meijer);
    c("k3igen", quartic_ik3_mellin(1.2, 0.3, 0.25, 0.2, 0.15, 1, 2).value,
      oracle(IntegralSpec{1.2, {I(0.3), K(0.25), K(0.2, 2), K(0.15, 2)}}), tol::meijer);
}

void hyp65_path(Check& c)
{
    c("iikkgen", quartic_i2k2_mellin(1.1, 0.2, 0.4, 0.1, 0.3, 1, 2).value,
      oracle(IntegralSpec{1.1, {I(0.2), I(0.4), K(0.1, 2), K(0.3, 2)}}), tol::hyp65);
    c("equal orders vs haw", quartic_i2k2_mellin(1, 0.25, 0.25, 0.25, 0.25, 1, 2).value,
      i2k2_family(I2K2Branch::haw, 0.25, 1, 2).value, tol::specialization);
    c("equal orders vs 2f1ab", quartic_i2k2_mellin(2, 0.3, 0.3, 0.3, 0.3, 1, 2).value,
      i2k2_family(I2K2Branch::gauss_ab, 0.3, 1, 2).value, tol::specialization);
}

void lauricella_path(Check& c)
{
    // int x^{s-1} I_mu(ax) K_nu(bx) dx in its Gauss-function form
    double s = 1.5, mu = 0.3, nu = 0.2, a = 1, b = 3;
    double A1 = (s + mu + nu) / 2, A2 = (s + mu - nu) / 2;
    double known = std::pow(2.0, s - 2) * std::pow(a, mu) / std::pow(b, s + mu) * qb::gamma(A1) * qb::gamma(A2) / qb::gamma(mu + 1) *
                   gauss_2f1(A1, A2, mu + 1, a * a / (b * b));
    double n1 = product_i_single_k_mellin(s, {mu}, {a}, nu, b).value;
    c("n=1 vs Gauss form", n1, known, tol::lauricella_n1);
    c("n=1 vs oracle", n1, oracle(IntegralSpec{s, {I(mu, a), K(nu, b)}}), tol::lauricella_n1);
    c("n=2 vs oracle", product_i_single_k_mellin(1.7, {0.3, -0.2}, {1, 0.5}, 0.4, 3).value,
      oracle(IntegralSpec{1.7, {I(0.3), I(-0.2, 0.5), K(0.4, 3)}}), tol::lauricella_n2);
    const double t = 1.0 / 3;
    for (double sg : {1.0, -1.0}) {
        double o = sg * t;
        c("n=3 orders " + std::string(sg > 0 ? "+" : "-") + "1/3",
          product_i_single_k_mellin(2, {o, o, o}, {1, 1, 1}, t, 4).value,
          oracle(IntegralSpec{2, {I(o), I(o), I(o), K(t, 4)}}), tol::lauricella_n3);
    }
    c("n=3 mixed orders", product_i_single_k_mellin(2, {t, t, -t}, {1, 1, 1}, t, 4).value,
      oracle(IntegralSpec{2, {I(t), I(t), I(-t), K(t, 4)}}), tol::lauricella_n3);
}

void airy_suite(Check& c)
{
    c("Ai^4", airy_quartic(AiryBranch::ai4, 1, 1).value, std::log(3.0) / (24 * pi * pi), tol::airy_limits);
    c("Ai^4 oracle", oracle(AirySpec{1, {Ai(), Ai(), Ai(), Ai()}}), std::log(3.0) / (24 * pi * pi), tol::airy_limits);
    c("Ai^3 Bi", airy_quartic(AiryBranch::ai3bi, 1, 1).value, 1 / (24 * pi), tol::airy_limits);
    c("Ai^3 Bi oracle", oracle(AirySpec{1, {Ai(), Ai(), Ai(), Bi()}}), 1 / (24 * pi), tol::airy_limits);
    c("ai22 (1,2)", airy_quartic(AiryBranch::ai22, 1, 2).value, oracle(AirySpec{1, {Ai(), Ai(), Ai(2), Ai(2)}}),
      tol::airy_pairs);
    double lion = airy_quartic(AiryBranch::lion, 1, 2).value;
    c("lion (1,2)", lion, oracle(AirySpec{1, {Bi(), Ai(), Ai(2), Ai(2)}}), tol::airy_pairs);
    c("lion2 (1,2)", airy_quartic(AiryBranch::lion2, 1, 2).value, oracle(AirySpec{1, {Bi(), Bi(), Ai(2), Ai(2)}}),
      tol::airy_pairs);
    c("lion3 (1,4)", airy_quartic(AiryBranch::lion3, 1, 4).value, oracle(AirySpec{1, {Bi(), Bi(), Bi(), Ai(4)}}),
      tol::airy_lion3);
    c("s57 = lion (1,2)", airy_quartic(AiryBranch::s57, 1, 2).value, lion, tol::s57_lion);
}

void ladders(Check& c)
{
    c("forab -> foraa", k2k2_family(K2K2Branch::forab, 0.3, 1, 1 + 1e-4).value,
      k2k2_family(K2K2Branch::foraa, 0.3, 1, 1).value, tol::ladder);
    c("li2 -> fox1", k2k2_family(K2K2Branch::li2, 0, 1 - 1e-4, 1).value, k2k2_family(K2K2Branch::fox1, 0, 1, 1).value,
      tol::ladder);
}

void properties(Check& c)
{
    for (double x = 0.1; x < 50; x += 0.37) c("Gamma recurrence", qb::gamma(x + 1), x * qb::gamma(x), tol::gamma_recurrence);
    for (double z = 0.013; z < 1; z += 0.031) {
        if (std::fabs(z - 0.5) < 1e-3) continue;
        c("reflection", qb::gamma(z) * qb::gamma(1 - z) * sin_pi(z) / pi, 1.0, tol::gamma_identities);
        c("duplication", qb::gamma(2 * z), std::pow(2.0, 2 * z - 1) / std::sqrt(pi) * qb::gamma(z) * qb::gamma(z + 0.5),
          tol::gamma_identities);
        double h = z - 0.5;
        c("half-shift reflection", qb::gamma(0.5 + h) * qb::gamma(0.5 - h) * cos_pi(h) / pi, 1.0, tol::gamma_identities);
    }
    for (long q = 2; q <= 12; ++q)
        for (long p = 1; p < q; ++p)
            c("digamma_rational", digamma_rational({p, q}), digamma(double(p) / double(q)), tol::digamma);

    for (double nu : {0.0, 1.0 / 3, 0.7, 2.0})
        for (double x : {0.5, 1.0, 2.0, 5.0}) {
            double h = 1e-5 * x;
            double di = (bessel_i(nu, x + h) - bessel_i(nu, x - h)) / (2 * h);
            double dk = (bessel_k(nu, x + h) - bessel_k(nu, x - h)) / (2 * h);
            c("Bessel Wronskian", bessel_i(nu, x) * dk - di * bessel_k(nu, x), -1 / x, tol::bessel_wronskian);
        }
    for (double x : {0.3, 1.0, 2.0, 3.0}) {
        double h = 1e-5 * x;
        double da = (airy_ai(x + h) - airy_ai(x - h)) / (2 * h);
        double db = (airy_bi(x + h) - airy_bi(x - h)) / (2 * h);
        c("Airy Wronskian", airy_ai(x) * db - da * airy_bi(x), 1 / pi, tol::airy_wronskian);
    }
    for (double nu : {1.0 / 3, 0.25, 0.7})
        for (double x : {0.5, 1.0, 5.0})
            c("connection", bessel_i_minus_via_k(nu, x), bessel_i(nu, x) + 2 * sin_pi(nu) / pi * bessel_k(nu, x),
              tol::ikrel);

    struct Kind {
        Elementary2F1 k;
        int n;
    };
    const Kind kinds[] = {{Elementary2F1::tanh_family, 0}, {Elementary2F1::tanh_family, 2}, {Elementary2F1::log_family, 1},
                          {Elementary2F1::log_family, 3},  {Elementary2F1::sixth_1, 0},     {Elementary2F1::sixth_5, 0},
                          {Elementary2F1::quarter_1, 0},   {Elementary2F1::quarter_3, 0}};
    for (const Kind& k : kinds)
        for (double z : {0.1, 0.3, 0.7, 0.95})
            c("elementary 2F1", elementary_2f1(k.k, z, k.n), pfq(elementary_2f1_spec(k.k, z, k.n)), tol::elementary_2f1);

    for (double z : {0.1, 0.5, 0.9}) {
        double series = 5 * gauss_2f1(1.0 / 6, 1, 7.0 / 6, z) - std::pow(z, 2.0 / 3) * gauss_2f1(5.0 / 6, 1, 11.0 / 6, z);
        c("D(z)", hyp_difference_D(z), series, tol::lemma_d);
    }

    for (double z : {3.0, 0.02}) {
        MeijerGSpec g{2, 2, 3, 4, {0.3, 0.65, 0.8}, {0.1, 0.45, 0.2, 0.65}, z};
        MeijerGSpec r = g_reduce(g);
        c("Slater reduction", g_slater(g), g_slater(r), tol::slater_reduction);
        MeijerGSpec h{2, 1, 3, 4, {0.3, 0.8, 0.55}, {0.55, 0.1, 0.45, 0.2}, z};
        c("Slater reduction (second kind)", g_slater(h), g_slater(g_reduce(h)), tol::slater_reduction);
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> run;
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "x K0^4 = 7 zeta(3)/8", fox1},
        {2, "x I0 K0^3 = pi^2/16", fox2},
        {3, "K^4 digamma table", k4_table},
        {4, "IK^3 table", ik3_table},
        {5, "mixed-scale elementary forms", mixed_elementary},
        {6, "polylogarithm forms", polylog_forms},
        {7, "generic Meijer G path", meijer_path},
        {8, "regularized 6F5 path", hyp65_path},
        {9, "Lauricella path", lauricella_path},
        {10, "Airy quartic suite", airy_suite},
        {11, "limit ladders", ladders},
        {12, "property suites", properties},
    };
    int failed = 0;
    for (const Criterion& cr : criteria) {
        Check c;
        try {
            cr.run(c);
        } catch (const Error& e) {
            c.fail(std::string(e.kind()) + ": " + e.what());
        } catch (const std::exception& e) {
            c.fail(e.what());
        }
        std::printf("%s %2d  %-30s %s\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.name, c.summary().c_str());
        failed += !c.ok();
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed ? 1 : 0;
}
