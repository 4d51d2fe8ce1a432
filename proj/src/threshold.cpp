#include "qdom/threshold.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdom/grid.hpp"

namespace qdom {

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e

double halley_wm1(double x, double w) {
    for (int it = 0; it < 80; ++it) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        double w1 = w - f / denom;
        if (!std::isfinite(w1)) break;
        if (std::abs(w1 - w) <= 1e-14 * (1.0 + std::abs(w1))) return w1;
        w = w1;
    }
    return w;
}

}  // namespace

double lambert_wm1(double x) {
    if (!(x < 0.0) || x < -kInvE - 1e-14)
        throw std::domain_error("lambert_wm1: x must lie in [-1/e, 0)");
    if (x <= -kInvE) return -1.0;

    double w;
    if (x < -0.1) {
        // near the branch point: series in p = sqrt(2(1 + e x))
        double p = std::sqrt(2.0 * (1.0 + M_E * x));
        w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
    } else {
        // asymptotic guess for x -> 0-
        double l1 = std::log(-x);
        double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley_wm1(x, w);
}

double lambert_wm1_from_log(double log_neg_x) {
    if (log_neg_x > -1.0 + 1e-14)
        throw std::domain_error("lambert_wm1_from_log: argument outside [-1/e, 0)");
    if (log_neg_x > -700.0) return lambert_wm1(-std::exp(log_neg_x));

    // w + log(-w) = log(-x), Newton in log form; |w| is huge here so the
    // iteration is well conditioned.
    double l1 = log_neg_x;
    double l2 = std::log(-l1);
    double w = l1 - l2 + l2 / l1;
    for (int it = 0; it < 100; ++it) {
        double g = w + std::log(-w) - log_neg_x;
        double step = g / (1.0 + 1.0 / w);
        w -= step;
        if (std::abs(step) <= 1e-13 * std::abs(w)) break;
    }
    return w;
}

void ThresholdInputs::validate() const {
    if (d < 2) throw std::invalid_argument("ThresholdInputs: d must be >= 2");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("ThresholdInputs: delta must be in (0,1)");
    if (!(Delta > 0.0))
        throw std::invalid_argument("ThresholdInputs: Delta must be positive (no margin, no finite threshold)");
    if (!(L > 0.0 && Lbar > 0.0 && C > 0.0 && c_d > 0.0))
        throw std::invalid_argument("ThresholdInputs: constants must be positive");
    auto [lo, hi] = theta_interval(d);
    if (!(theta > lo && theta < hi))
        throw std::invalid_argument("ThresholdInputs: theta outside the admissible interval");
}

ThresholdResult sample_threshold(const ThresholdInputs& in) {
    in.validate();
    const double d = in.d;
    const double theta = in.theta;
    const bool low_theta = theta <= 1.0 / d;

    const double log_margin = 2.0 * std::log(in.delta) + (d + 2.0) * std::log(in.Delta);
    const double log_4LL = std::log(4.0 * (in.L + in.Lbar));
    const double log512cd = std::log(512.0) + std::log(in.c_d);

    // grid-resolution requirement
    const double logA = log512cd + 2.0 * std::log(in.Lbar) + d * log_4LL - log_margin;
    const double e1 = low_theta ? 1.0 / (2.0 * theta) : (d - 1.0) / (1.0 - theta);
    const double log_n1 = e1 * logA;

    // transport-error requirement
    const double logB = log_margin - log512cd - std::log(in.C) - 2.0 * log_4LL;

    ThresholdResult res;
    double log_n2;
    if (in.d <= 3) {
        double e2 = low_theta ? 2.0 / (1.0 - 2.0 * theta * d)
                              : 2.0 * (d - 1.0) / (2.0 * theta * d - d - 1.0);
        log_n2 = e2 * logB;
        res.branch = low_theta ? "d<=3, theta<=1/d" : "d<=3, theta>1/d";
    } else if (in.d == 4) {
        double a = low_theta ? 0.5 - theta * d : 0.5 - d * (1.0 - theta) / (d - 1.0);
        double log_arg = std::log(-a) + logB;
        if (log_arg > -1.0) {
            // a*B below -1/e: log(n)*n^a <= B holds for every n, the
            // requirement is vacuous
            log_n2 = 0.0;
        } else {
            // W_{-1}(a * B); pass log(-a*B) to stay stable when B underflows
            log_n2 = lambert_wm1_from_log(log_arg) / a;
        }
        res.branch = low_theta ? "d=4, theta<=1/d" : "d=4, theta>1/d";
    } else {
        double e2 = low_theta ? d / (d - 2.0 - theta * d * d)
                              : d * (d - 1.0) / (theta * d * d - 3.0 * d + 2.0);
        log_n2 = e2 * logB;
        res.branch = low_theta ? "d>=5, theta<=1/d" : "d>=5, theta>1/d";
    }

    res.n1 = std::exp(log_n1);
    res.n2 = std::exp(log_n2);
    double n = std::ceil(std::max(res.n1, res.n2));
    if (!std::isfinite(n) || n > 9.0e18) {
        res.overflow = true;
        res.n_star = std::numeric_limits<double>::infinity();
    } else {
        res.n_star = std::max(n, 1.0);
    }
    return res;
}

}  // namespace qdom
