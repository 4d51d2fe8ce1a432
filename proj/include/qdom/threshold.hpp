#ifndef QDOM_THRESHOLD_HPP
#define QDOM_THRESHOLD_HPP

#include <string>

namespace qdom {

// Lambert W on branch -1: the solution w <= -1 of w*exp(w) = x for
// x in [-1/e, 0). Halley iteration to 1e-12 residual.
double lambert_wm1(double x);

// Branch -1 evaluated from log(-x); stable when -x underflows a double.
// Solves w + log(-w) = log(-x) by Newton on the log form.
double lambert_wm1_from_log(double log_neg_x);

// Constants entering the sample-size threshold. The Lipschitz and moment
// constants are properties of the unknown true distributions and are supplied
// by the caller.
struct ThresholdInputs {
    int d = 2;           // objective dimension
    double delta = 0.0;  // Type-I error, in (0,1)
    double Delta = 0.0;  // componentwise separation margin of the quantile maps
    double L = 0.0;      // bi-Lipschitz constant (max over both maps)
    double Lbar = 0.0;   // interpolation Lipschitz constant
    double C = 0.0;      // moment constant of the transport-error bound
    double c_d = 0.0;    // covering constant
    double theta = 0.0;  // radial exponent

    void validate() const;
};

struct ThresholdResult {
    double n1 = 0.0;     // grid-resolution requirement
    double n2 = 0.0;     // transport-error requirement
    double n_star = 0.0; // ceil(max(n1, n2)); +inf on overflow
    bool overflow = false;
    std::string branch;  // which of the six cases fired
};

// Minimum sample size guaranteeing the empirical dominance test keeps its
// Type-I error below delta. Six-branch closed form on
// (d <= 3 | d = 4 | d >= 5) x (theta <= 1/d | theta > 1/d); the d = 4
// branches go through Lambert W on branch -1.
ThresholdResult sample_threshold(const ThresholdInputs& in);

}  // namespace qdom

#endif
