#pragma once

#include <complex>
#include <vector>

namespace qb {

struct HypSeriesSpec {
    std::vector<double> a;
    std::vector<double> b;
    double z = 0.0;
    bool regularized = false;
    // multiplies the series; pfq_cancel stores 1/Gamma(a_p) here
    double scale = 1.0;
};

struct SeriesResult {
    double value = 0.0;
    long terms = 0;
    double abs_error = 0.0;
    bool accelerated = false;
};

SeriesResult pfq_eval(const HypSeriesSpec& spec);
double pfq(const HypSeriesSpec& spec);
HypSeriesSpec pfq_cancel(const HypSeriesSpec& spec);

double gauss_2f1(double a, double b, double c, double z);
double gauss_2f1_unit(double a, double b, double c);

struct InversionTerms {
    std::complex<double> first;
    std::complex<double> second;
    std::complex<double> sum() const { return first + second; }
};

// 2F1(a,b;c;z) for z > 1 on the side where -z = z e^{i pi}
InversionTerms gauss_2f1_inversion(double a, double b, double c, double z);
double gauss_2f1_log_asymptotic(double a, double b, double z);

enum class Elementary2F1 {
    tanh_family, // 2F1(n+1/2, 1; n+3/2; z)
    log_family,  // 2F1(n, 1; n+1; z)
    sixth_1,     // 2F1(1/6, 1; 7/6; z)
    sixth_5,     // 2F1(5/6, 1; 11/6; z)
    quarter_1,   // 2F1(1/4, 1; 5/4; z)
    quarter_3,   // 2F1(3/4, 1; 7/4; z)
};

double elementary_2f1(Elementary2F1 kind, double z, int n = 0);
HypSeriesSpec elementary_2f1_spec(Elementary2F1 kind, double z, int n = 0);

// the quadrant-aware angle of x + iy
double two_arg_atan(double x, double y);

} // namespace qb
