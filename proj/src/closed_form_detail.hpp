#pragma once

#include "qb/errors.hpp"
#include "qb/integral_spec.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qb::cf {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;
constexpr double singular_gap = 1e-6;

inline void require_positive(double a, const char* who)
{
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError(std::string(who) + ": scales must be positive");
}

// NearSingularParameter when alpha is within singular_gap of any listed point
inline void guard(double alpha, std::initializer_list<double> points, const char* who)
{
    for (double p : points)
        if (std::fabs(alpha - p) < singular_gap)
            throw NearSingularParameter(std::string(who) + ": order " + std::to_string(alpha) +
                                        " is too close to the singular value " + std::to_string(p));
}

inline bool near(double x, double y, double tol = 1e-12) { return std::fabs(x - y) <= tol * std::max(1.0, std::fabs(y)); }

inline EvalResult result(double value, const char* id, double rel_err = 1e-14)
{
    if (!std::isfinite(value)) throw OverflowError(std::string(id) + ": non-finite value");
    EvalResult r;
    r.value = value;
    r.formula_id = id;
    r.est_error = rel_err * std::fabs(value);
    return r;
}

inline double acoth(double x) { return std::atanh(1.0 / x); }

} // namespace qb::cf
