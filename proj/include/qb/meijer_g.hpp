#pragma once

#include <vector>

namespace qb {

struct MeijerGSpec {
    int m = 0;
    int n = 0;
    int p = 0;
    int q = 0;
    std::vector<double> a;
    std::vector<double> b;
    double z = 0.0;
};

// Removes one matched upper/lower pair; throws NoReduction when none exists.
MeijerGSpec g_reduce(const MeijerGSpec& spec);
// Applies g_reduce until no pair is left.
MeijerGSpec g_reduce_all(const MeijerGSpec& spec);

struct SlaterTerm {
    double prefactor = 0.0; // multiplies the regularized series
    double series = 0.0;    // regularized pF(q-1)
};

std::vector<SlaterTerm> g_slater_terms(const MeijerGSpec& spec);
double g_slater(const MeijerGSpec& spec);

} // namespace qb
