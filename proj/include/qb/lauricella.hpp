#pragma once

#include <vector>

namespace qb {

struct LauricellaSpec {
    double a = 0.0;
    double b = 0.0;
    std::vector<double> c;
    std::vector<double> z;
};

struct LauricellaResult {
    double value = 0.0;
    int shells = 0;
    double abs_error = 0.0;
    bool near_boundary = false;
};

LauricellaResult lauricella_fc_eval(const LauricellaSpec& spec);
double lauricella_fc(const LauricellaSpec& spec);
// sum of the first `shells` total-degree shells, no stopping rule
double lauricella_fc_partial(const LauricellaSpec& spec, int shells);

} // namespace qb
