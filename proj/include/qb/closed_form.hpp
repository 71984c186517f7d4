#pragma once

#include "qb/integral_spec.hpp"

#include <vector>

namespace qb {

// int_0^inf x^{s-1} K_mu(ax) K_nu(ax) dx
EvalResult kk_pair_mellin(double s, double mu, double nu, double a);

// int_0^inf x^{s-1} K_al(ax) K_be(ax) K_ga(bx) K_de(bx) dx
EvalResult quartic_k_mellin(double s, double al, double be, double ga, double de, double a, double b);
// int_0^inf x^{s-1} I_al(ax) K_be(ax) K_ga(bx) K_de(bx) dx, a < b
EvalResult quartic_ik3_mellin(double s, double al, double be, double ga, double de, double a, double b);
// int_0^inf x^{s-1} I_al(ax) I_be(ax) K_ga(bx) K_de(bx) dx, a <= b
EvalResult quartic_i2k2_mellin(double s, double al, double be, double ga, double de, double a, double b);
// int_0^inf x^{s-1} prod_k I_{orders[k]}(scales[k] x) K_beta(bx) dx
EvalResult product_i_single_k_mellin(double s, const std::vector<double>& orders, const std::vector<double>& scales,
                                     double beta, double b);

// x K_al^2(ax) K_al^2(bx), or the weightless slv1 case
enum class K2K2Branch { slv1, forab, foraa, li2, fox1, kab13, quarter_coth, k4_table };
EvalResult k2k2_family(K2K2Branch branch, double alpha, double a, double b);

// x I_al(ax) K_al(ax) K_al^2(bx), or the weightless sch1 case
enum class IKK2Branch { sch1, forab2, foraa2, lili, lilix, fox2, elementary, ik3_table };
EvalResult ikk2_family(IKK2Branch branch, double alpha, double a, double b);

// x I_al^2(ax) K_al^2(bx), or the weightless haw/ox1 cases
enum class I2K2Branch { haw, gauss_ab, integer_order, half_integer_order, ox1 };
EvalResult i2k2_family(I2K2Branch branch, double alpha, double a, double b);

// Airy quartic products: Ai^2(ax)Ai^2(bx), Bi(ax)Ai(ax)Ai^2(bx), Bi^2(ax)Ai^2(bx), Bi^3(ax)Ai(bx)
enum class AiryBranch { ai22, ai4, lion, s57, ai3bi, lion2, lion3 };
EvalResult airy_quartic(AiryBranch branch, double a, double b);
EvalResult airy_quartic(const AirySpec& spec);

// 5 2F1(1/6,1;7/6;z) - z^{2/3} 2F1(5/6,1;11/6;z) in closed form
double hyp_difference_D(double z);

// orders of the K^4 and IK^3 digamma tables
const std::vector<RationalArg>& k4_table_orders();
const std::vector<RationalArg>& ik3_table_orders();
// the digamma formulas the tables come from, with psi evaluated at rational points
double k4_table_parent(RationalArg alpha, double a);
double ik3_table_parent(RationalArg alpha, double a);

// Picks the catalog formula for a spec. Throws Unsupported when nothing applies.
EvalResult evaluate(const AnySpec& spec);

} // namespace qb
