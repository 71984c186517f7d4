#include "closed_form_detail.hpp"
#include "qb/closed_form.hpp"
#include "qb/hypergeometric.hpp"

#include <algorithm>

namespace qb {

using namespace cf;

EvalResult airy_quartic(AiryBranch branch, double a, double b)
{
    require_positive(a, "airy_quartic");
    require_positive(b, "airy_quartic");
    double rab = std::sqrt(a * b), c = 1.0 / (12.0 * pi * pi * rab);
    switch (branch) {
    case AiryBranch::ai22:
        if (a == b) return result(std::log(3.0) / (24.0 * pi * pi * a), "ai4");
        return result(c * std::atanh(rab / (a + b)), "ai22");
    case AiryBranch::ai4:
        if (a != b) throw BranchMismatch("ai4: branch needs a = b");
        return result(std::log(3.0) / (24.0 * pi * pi * a), "ai4");
    case AiryBranch::lion:
        if (!(a < b)) throw DomainError("lion: needs a < b");
        return result(c * std::atan(std::sqrt(3.0) * rab / (b - a)), "lion");
    case AiryBranch::s57: {
        if (!(a < b)) throw DomainError("s57: needs a < b");
        double t = std::pow(a / b, 3.0);
        double series = 5.0 * elementary_2f1(Elementary2F1::sixth_1, t) -
                        std::pow(t, 2.0 / 3.0) * elementary_2f1(Elementary2F1::sixth_5, t);
        EvalResult r = result(std::sqrt(3.0) / (60.0 * pi * pi * b) * series, "s57");
        r.diagnostics["D"] = hyp_difference_D(t);
        return r;
    }
    case AiryBranch::ai3bi:
        if (a != b) throw BranchMismatch("ai3bi: branch needs a = b");
        return result(1.0 / (24.0 * pi * a), "ai3bi");
    case AiryBranch::lion2:
        if (!(a < b)) throw DomainError("lion2: needs a < b");
        return result(c * (std::atanh(std::pow(a / b, 1.5)) + 3.0 * std::atanh(std::sqrt(a / b))), "lion2");
    case AiryBranch::lion3: {
        double A = std::pow(a, 1.5), B = std::pow(b, 1.5);
        if (!(B > 3.0 * A)) throw DomainError("lion3: needs b^{3/2} > 3 a^{3/2}");
        const double t = 1.0 / 3.0;
        auto J = [&](double p, double q, double r) {
            return product_i_single_k_mellin(2.0, {p, q, r}, {A, A, A}, t, B);
        };
        EvalResult j1 = J(t, t, t), j2 = J(t, t, -t), j3 = J(t, -t, -t), j4 = J(-t, -t, -t);
        double pre = A * std::sqrt(b) / (6.0 * pi);
        EvalResult r = result(pre * (j1.value + 3.0 * j2.value + 3.0 * j3.value + j4.value), "lion3", 1e-13);
        r.est_error += pre * (j1.est_error + 3.0 * j2.est_error + 3.0 * j3.est_error + j4.est_error);
        r.diagnostics["shells"] = std::max({j1.diagnostics["shells"], j2.diagnostics["shells"],
                                            j3.diagnostics["shells"], j4.diagnostics["shells"]});
        if (std::sqrt(A / B) * 3.0 > 0.95) r.diagnostics["near_boundary"] = 1.0;
        return r;
    }
    }
    throw BranchMismatch("airy_quartic: unknown branch");
}

EvalResult airy_quartic(const AirySpec& spec)
{
    if (spec.s.value != 1.0) throw Unsupported("airy_quartic: only the unweighted integrals (s = 1) are catalogued");
    if (spec.factors.size() != 4) throw Unsupported("airy_quartic: need four Airy factors");
    std::vector<double> ai, bi;
    for (const auto& f : spec.factors) (f.kind == AiryKind::Ai ? ai : bi).push_back(f.scale.value);
    std::sort(ai.begin(), ai.end());
    std::sort(bi.begin(), bi.end());
    auto all_equal = [](const std::vector<double>& v) { return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; }); };
    if (bi.empty()) {
        if (ai[0] == ai[1] && ai[2] == ai[3]) return airy_quartic(AiryBranch::ai22, ai[0], ai[2]);
    } else if (bi.size() == 1) {
        // Bi(ax) Ai(ax) Ai^2(bx)
        double a = bi[0];
        auto it = std::find(ai.begin(), ai.end(), a);
        if (it != ai.end()) {
            std::vector<double> rest = ai;
            rest.erase(rest.begin() + (it - ai.begin()));
            if (rest[0] == rest[1]) {
                if (rest[0] == a) return airy_quartic(AiryBranch::ai3bi, a, a);
                return airy_quartic(AiryBranch::lion, a, rest[0]);
            }
        }
    } else if (bi.size() == 2) {
        if (all_equal(bi) && all_equal(ai)) return airy_quartic(AiryBranch::lion2, bi[0], ai[0]);
    } else if (bi.size() == 3) {
        if (all_equal(bi)) return airy_quartic(AiryBranch::lion3, bi[0], ai[0]);
    }
    throw Unsupported("airy_quartic: no catalogued formula for " + render(spec));
}

} // namespace qb
