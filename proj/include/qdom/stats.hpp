#ifndef QDOM_STATS_HPP
#define QDOM_STATS_HPP

#include "qdom/rng.hpp"

namespace qdom {

// Standard normal CDF.
double norm_cdf(double x);

// Standard normal quantile function. Rational approximation refined by one
// Newton step on norm_cdf; accurate to ~1e-12 on (0,1).
double norm_ppf(double p);

// Draw from the normal distribution with the given mean and standard
// deviation, truncated to [a, b]. Inverse-CDF method; sigma = 0 returns the
// mean clamped into the interval.
double truncnorm_sample(double mean, double sigma, double a, double b, Rng& rng);

}  // namespace qdom

#endif
