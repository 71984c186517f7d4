#pragma once

#include "qb/integral_spec.hpp"

#include <limits>
#include <vector>

namespace qb {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_levels = 12;
    double split_point = 1.0;
    // nodes beyond this point are dropped and covered by the tail bound
    double upper_limit = std::numeric_limits<double>::infinity();
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long evaluations = 0;
    double tail_bound = 0.0;
    double truncation_point = 0.0; // largest abscissa that contributed
    int levels = 0;
    std::vector<double> level_deltas;
};

double integrand(const IntegralSpec& spec, double x);
double integrand(const AirySpec& spec, double x);
double integrand(const AnySpec& spec, double x);

QuadratureResult integrate(const AnySpec& spec, const QuadratureOptions& opts = {});

} // namespace qb
