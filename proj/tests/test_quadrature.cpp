#include "doctest.h"
#include "qb/errors.hpp"
#include "qb/quadrature.hpp"
#include "qb/scalar_special.hpp"
#include "test_util.hpp"

#include <cmath>
#include <array>
#include <numbers>
#include <vector>

using namespace qb;
using qbt::rel;
constexpr double pi = std::numbers::pi;

namespace {

BesselFactor K(double nu, double c = 1.0) { return {BesselKind::K, nu, c}; }
BesselFactor I(double nu, double c = 1.0) { return {BesselKind::I, nu, c}; }
AiryFactor Ai(double c = 1.0) { return {AiryKind::Ai, c}; }
AiryFactor Bi(double c = 1.0) { return {AiryKind::Bi, c}; }

QuadratureOptions tight() { return {1e-12, 1e-300}; }

} // namespace

TEST_CASE("check_convergence")
{
    CHECK(check_convergence(IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}}).ok);
    CHECK(check_convergence(IntegralSpec{1.0, {I(0), K(0), K(0), K(0)}}).ok);
    CHECK_FALSE(check_convergence(IntegralSpec{1.0, {I(0.3, 2), K(0.3)}}).ok);
    CHECK_FALSE(check_convergence(IntegralSpec{1.0, {K(0.5), K(0.6)}}).ok);
    CHECK(check_convergence(IntegralSpec{1.2, {K(0.5), K(0.6)}}).ok);
    CHECK(check_convergence(IntegralSpec{1.5, {I(0.5), I(0.5), K(0.5), K(0.5)}}).ok);
    CHECK_FALSE(check_convergence(IntegralSpec{2.0, {I(0.5), I(0.5), K(0.5), K(0.5)}}).ok);
    CHECK_FALSE(check_convergence(IntegralSpec{1.0, {I(0.0)}}).ok);
    CHECK_FALSE(check_convergence(IntegralSpec{1.0, {K(0), K(0), K(0), K(0), K(0)}}).ok);
    CHECK(check_convergence(AirySpec{1.0, {Ai(), Ai(), Ai(), Bi()}}).ok);
    CHECK_FALSE(check_convergence(AirySpec{1.0, {Ai(), Ai(), Bi(), Bi()}}).ok);
    CHECK(check_convergence(AirySpec{1.0, {Bi(), Bi(), Ai(2), Ai(2)}}).ok);
}

TEST_CASE("integrand")
{
    CHECK(rel(integrand(IntegralSpec{1.0, {K(0), K(0), K(0), K(0)}}, 1.0), 0.03142166689178870398751533) < 1e-14);
    double big = integrand(IntegralSpec{2.0, {I(0), K(0), K(0), K(0)}}, 50.0);
    CHECK(rel(big, 5.81491296860831856695982559302e-46) < 1e-13);
    double tiny = integrand(IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}}, 1e-200);
    CHECK(tiny > 0.0);
    CHECK(tiny < 1e-185);
    // a product whose factors overflow individually
    double x = 1e-250;
    double v = integrand(IntegralSpec{1.9, {K(0.45), K(0.45), K(0.45), K(0.45)}}, x);
    CHECK(std::isfinite(v));
    // leading small-x term of K_nu: Gamma(nu)/2 (x/2)^{-nu}
    double lead = 0.9 * std::log(x) + 4.0 * std::log(0.5 * qb::gamma(0.45)) - 1.8 * std::log(x / 2);
    CHECK(rel(v, std::exp(lead)) < 1e-10);
    CHECK_THROWS_AS(integrand(IntegralSpec{2.0, {K(0)}}, 0.0), DomainError);
}

TEST_CASE("fox1 and fox2 targets")
{
    auto r1 = integrate(IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}});
    CHECK(rel(r1.value, 7.0 * zeta3 / 8.0) < 1e-10);
    CHECK(r1.err_estimate <= 1e-10 * r1.value);
    auto r2 = integrate(IntegralSpec{2.0, {I(0), K(0), K(0), K(0)}});
    CHECK(rel(r2.value, pi * pi / 16.0) < 1e-10);
}

TEST_CASE("pair integrals against the Gamma closed form")
{
    auto pair = [](double s, double mu, double nu) {
        return std::pow(2.0, s - 3.0) / qb::gamma(s) * qb::gamma((s + mu + nu) / 2) * qb::gamma((s - mu + nu) / 2) *
               qb::gamma((s + mu - nu) / 2) * qb::gamma((s - mu - nu) / 2);
    };
    for (auto [s, mu, nu] : {std::array{2.0, 0.0, 0.0}, {1.5, 0.3, 0.2}, {3.0, 1.0, 0.5}, {3.0, 0.5, 0.5}}) {
        auto r = integrate(IntegralSpec{s, {K(mu), K(nu)}}, tight());
        CHECK(rel(r.value, pair(s, mu, nu)) < 1e-10);
    }
    CHECK(rel(integrate(IntegralSpec{3.0, {K(0.5), K(0.5)}}).value, pi / 8.0) < 1e-10);
}

TEST_CASE("reference integrals")
{
    CHECK(rel(integrate(IntegralSpec{1.3, {K(0.21), K(0.17), K(0.11, 2), K(0.07, 2)}}, tight()).value,
              6.98616680303779241737) < 1e-11);
    CHECK(rel(integrate(IntegralSpec{1.1, {I(0.2), I(0.4), K(0.1, 2), K(0.3, 2)}}, tight()).value,
              0.198523034359479461198) < 1e-11);
    CHECK(rel(integrate(AirySpec{1.0, {Ai(), Ai(), Ai(), Ai()}}, tight()).value, std::log(3.0) / (24 * pi * pi)) <
          1e-11);
    CHECK(rel(integrate(AirySpec{1.0, {Ai(), Ai(), Ai(), Bi()}}, tight()).value, 1.0 / (24 * pi)) < 1e-11);
    CHECK(rel(integrate(AirySpec{1.0, {Bi(), Bi(), Bi(), Ai(4)}}, tight()).value, 0.03072826064459914296930) < 1e-11);
}

TEST_CASE("equal scale sums: power-law tail")
{
    auto r = integrate(IntegralSpec{1.1, {I(0.2), I(0.4), K(0.1), K(0.3)}}, tight());
    CHECK(rel(r.value, 0.857894728168959433878) < 1e-11);
}

TEST_CASE("level deltas shrink geometrically")
{
    auto r = integrate(IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}}, tight());
    REQUIRE(r.level_deltas.size() >= 3);
    int checked = 0;
    for (std::size_t i = 1; i + 1 < r.level_deltas.size(); ++i) {
        if (r.level_deltas[i + 1] < 1e-14) break;
        CHECK(r.level_deltas[i + 1] <= r.level_deltas[i] / 4.0);
        ++checked;
    }
    CHECK(checked >= 2);
}

TEST_CASE("tail bound covers doubling the truncation point")
{
    std::vector<AnySpec> specs{
        IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}},
        IntegralSpec{2.0, {I(0), K(0), K(0), K(0)}},
        IntegralSpec{1.3, {K(0.21), K(0.17), K(0.11, 2), K(0.07, 2)}},
        IntegralSpec{1.1, {I(0.2), I(0.4), K(0.1, 2), K(0.3, 2)}},
        AirySpec{1.0, {Ai(), Ai(), Ai(), Ai()}},
        AirySpec{1.0, {Ai(), Ai(), Ai(), Bi()}},
    };
    for (const auto& spec : specs) {
        auto full = integrate(spec, tight());
        QuadratureOptions cut{1e-3, 1e-300};
        cut.upper_limit = 1.0 + 0.025 * full.truncation_point;
        auto r1 = integrate(spec, cut);
        cut.upper_limit = 2.0 * cut.upper_limit;
        auto r2 = integrate(spec, cut);
        CHECK(r2.value != r1.value);
        CHECK(std::fabs(r2.value - r1.value) <= r1.tail_bound);
        CHECK(std::fabs(full.value - r1.value) <= r1.err_estimate);
    }
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(integrate(IntegralSpec{1.0, {I(0.3, 2), K(0.3)}}), DivergentSpec);
    CHECK_THROWS_AS(integrate(AirySpec{1.0, {Bi(), Ai()}}), DivergentSpec);
    QuadratureOptions bad;
    bad.max_levels = 17;
    CHECK_THROWS_AS(integrate(IntegralSpec{2.0, {K(0)}}, bad), DomainError);
    QuadratureOptions few{1e-15, 1e-300, 2};
    CHECK_THROWS_AS(integrate(IntegralSpec{2.0, {K(0), K(0), K(0), K(0)}}, few), ToleranceNotMet);
}
