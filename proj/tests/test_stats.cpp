#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdom/stats.hpp"

using namespace qdom;

TEST_CASE("norm_cdf and norm_ppf invert each other") {
    CHECK(norm_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(norm_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
    for (double p : {1e-10, 1e-4, 0.01, 0.3, 0.5, 0.7, 0.99, 1 - 1e-10}) {
        CHECK(norm_cdf(norm_ppf(p)) == doctest::Approx(p).epsilon(1e-10));
    }
    CHECK(std::isinf(norm_ppf(0.0)));
    CHECK(std::isinf(norm_ppf(1.0)));
    CHECK_THROWS_AS(norm_ppf(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(norm_ppf(1.1), std::invalid_argument);
}

TEST_CASE("truncated normal respects the interval and degenerate sigma") {
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        double x = truncnorm_sample(0.5, 0.1, 0.0, 1.0, rng);
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
    }
    CHECK(truncnorm_sample(0.5, 0.0, 0.0, 1.0, rng) == 0.5);
    CHECK(truncnorm_sample(4.0, 0.0, 0.0, 1.0, rng) == 1.0);
    CHECK(truncnorm_sample(-4.0, 0.0, 0.0, 1.0, rng) == 0.0);
}

TEST_CASE("truncated normal MC mean matches the closed form") {
    // mean of N(mu, s^2) truncated to [a, b]:
    //   mu + s * (phi(alpha) - phi(beta)) / (Phi(beta) - Phi(alpha))
    const double mu = 0.3, s = 0.2, a = 0.0, b = 1.0;
    auto phi = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); };
    double alpha = (a - mu) / s, beta = (b - mu) / s;
    double Z = norm_cdf(beta) - norm_cdf(alpha);
    double expect = mu + s * (phi(alpha) - phi(beta)) / Z;

    Rng rng(9);
    const int N = 200000;
    double sum = 0.0;
    for (int i = 0; i < N; ++i) sum += truncnorm_sample(mu, s, a, b, rng);
    CHECK(sum / N == doctest::Approx(expect).epsilon(0.01));
}

TEST_CASE("interior truncation barely moves the distribution") {
    // centered well inside [-5, 5], truncation is a no-op to MC accuracy
    Rng rng(15);
    const int N = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < N; ++i) {
        double x = truncnorm_sample(0.0, 0.1, -5.0, 5.0, rng);
        sum += x;
        sq += x * x;
    }
    CHECK(std::abs(sum / N) < 0.002);  // MC noise is ~3e-4 at this N
    CHECK(std::sqrt(sq / N) == doctest::Approx(0.1).epsilon(0.02));
}
