#include "closed_form_detail.hpp"
#include "qb/closed_form.hpp"

#include <algorithm>

namespace qb {

using namespace cf;

namespace {

struct Term {
    double order;
    double scale;
};

bool is_table_order(const std::vector<RationalArg>& t, double al)
{
    return std::any_of(t.begin(), t.end(), [&](const RationalArg& r) { return near(al, double(r.p) / double(r.q)); });
}

EvalResult four_k(double s, std::vector<Term> k)
{
    std::sort(k.begin(), k.end(), [](const Term& x, const Term& y) { return x.scale < y.scale; });
    if (k[0].scale != k[1].scale || k[2].scale != k[3].scale)
        throw Unsupported("evaluate: K factors must come in two equal-scale pairs");
    double a = k[0].scale, b = k[2].scale;
    double nu = std::fabs(k[0].order);
    bool equal = std::all_of(k.begin(), k.end(), [&](const Term& t) { return near(std::fabs(t.order), nu); });
    if (equal && s == 2.0) {
        if (a == b) {
            if (near(nu, 0.0)) return k2k2_family(K2K2Branch::fox1, 0.0, a, b);
            if (is_table_order(k4_table_orders(), nu)) return k2k2_family(K2K2Branch::k4_table, nu, a, b);
            return k2k2_family(K2K2Branch::foraa, nu, a, b);
        }
        if (near(nu, 0.0)) return k2k2_family(K2K2Branch::li2, 0.0, a, b);
        if (near(nu, 1.0 / 3.0)) return k2k2_family(K2K2Branch::kab13, nu, a, b);
        if (near(nu, 0.25)) return k2k2_family(K2K2Branch::quarter_coth, nu, a, b);
        return k2k2_family(K2K2Branch::forab, nu, a, b);
    }
    if (equal && s == 1.0 && nu < 0.25) return k2k2_family(K2K2Branch::slv1, nu, a, b);
    return quartic_k_mellin(s, k[0].order, k[1].order, k[2].order, k[3].order, a, b);
}

EvalResult one_i_three_k(double s, Term i, std::vector<Term> k)
{
    double a = i.scale;
    auto it = std::find_if(k.begin(), k.end(), [&](const Term& t) { return t.scale == a; });
    if (it == k.end()) throw Unsupported("evaluate: the I factor needs a K partner of the same scale");
    Term partner = *it;
    k.erase(it);
    if (k[0].scale != k[1].scale) throw Unsupported("evaluate: the remaining K factors must share a scale");
    double b = k[0].scale, al = i.order;
    bool equal = near(std::fabs(partner.order), std::fabs(al)) && near(std::fabs(k[0].order), std::fabs(al)) &&
                 near(std::fabs(k[1].order), std::fabs(al));
    if (equal && s == 2.0) {
        if (a == b) {
            if (near(al, 0.0)) return ikk2_family(IKK2Branch::fox2, 0.0, a, b);
            if (is_table_order(ik3_table_orders(), al)) return ikk2_family(IKK2Branch::ik3_table, al, a, b);
            return ikk2_family(IKK2Branch::foraa2, al, a, b);
        }
        if (near(al, 0.0)) return ikk2_family(a < b ? IKK2Branch::lili : IKK2Branch::lilix, 0.0, a, b);
        if (near(al, 0.5) || near(al, 0.25) || near(al, -0.25)) return ikk2_family(IKK2Branch::elementary, al, a, b);
        return ikk2_family(IKK2Branch::forab2, al, a, b);
    }
    if (equal && s == 1.0 && !near(al, 0.0)) return ikk2_family(IKK2Branch::sch1, al, a, b);
    return quartic_ik3_mellin(s, al, partner.order, k[0].order, k[1].order, a, b);
}

EvalResult two_i_two_k(double s, const std::vector<Term>& i, const std::vector<Term>& k)
{
    if (i[0].scale != i[1].scale || k[0].scale != k[1].scale)
        throw Unsupported("evaluate: I and K pairs must each share a scale");
    double a = i[0].scale, b = k[0].scale, al = i[0].order;
    bool equal = near(i[1].order, al) && near(std::fabs(k[0].order), std::fabs(al)) &&
                 near(std::fabs(k[1].order), std::fabs(al));
    if (equal && s == 1.0 && al > -0.25) {
        if (near(al, 0.0)) return i2k2_family(I2K2Branch::ox1, 0.0, a, b);
        return i2k2_family(I2K2Branch::haw, al, a, b);
    }
    if (equal && s == 2.0 && a < b && al > -0.5) {
        if (near(al, std::round(al)) && al > -0.5) return i2k2_family(I2K2Branch::integer_order, al, a, b);
        if (near(al - 0.5, std::round(al - 0.5))) return i2k2_family(I2K2Branch::half_integer_order, al, a, b);
        return i2k2_family(I2K2Branch::gauss_ab, al, a, b);
    }
    return quartic_i2k2_mellin(s, i[0].order, i[1].order, k[0].order, k[1].order, a, b);
}

EvalResult evaluate_bessel(const IntegralSpec& spec)
{
    std::vector<Term> is, ks;
    for (const auto& f : spec.factors) (f.kind == BesselKind::I ? is : ks).push_back({f.order.value, f.scale.value});
    double s = spec.s.value;
    if (is.empty() && ks.size() == 2 && ks[0].scale == ks[1].scale)
        return kk_pair_mellin(s, ks[0].order, ks[1].order, ks[0].scale);
    if (ks.size() == 1 && !is.empty() && is.size() <= 3) {
        std::vector<double> orders, scales;
        for (const auto& t : is) {
            orders.push_back(t.order);
            scales.push_back(t.scale);
        }
        return product_i_single_k_mellin(s, orders, scales, ks[0].order, ks[0].scale);
    }
    if (is.empty() && ks.size() == 4) return four_k(s, ks);
    if (is.size() == 1 && ks.size() == 3) return one_i_three_k(s, is[0], ks);
    if (is.size() == 2 && ks.size() == 2) return two_i_two_k(s, is, ks);
    throw Unsupported("evaluate: no catalogued formula for " + render(spec));
}

} // namespace

EvalResult evaluate(const AnySpec& spec)
{
    Verdict v = check_convergence(spec);
    if (!v) throw DivergentSpec("evaluate: " + v.reason);
    if (const auto* b = std::get_if<IntegralSpec>(&spec)) return evaluate_bessel(*b);
    return airy_quartic(std::get<AirySpec>(spec));
}

} // namespace qb
