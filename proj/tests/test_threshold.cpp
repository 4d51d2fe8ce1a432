#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <limits>
#include <utility>

#include "qdom/threshold.hpp"

using namespace qdom;

namespace {

ThresholdInputs base_inputs(int d, double theta) {
    ThresholdInputs in;
    in.d = d;
    in.delta = 0.1;
    in.Delta = 1.0;
    in.L = 0.05;
    in.Lbar = 0.05;
    in.C = 1.0;
    in.c_d = 0.01;
    in.theta = theta;
    return in;
}

}  // namespace

TEST_CASE("lambert_wm1 satisfies the defining equation") {
    for (double x : {-0.367879, -0.3, -0.2, -0.1, -0.05, -1e-3, -1e-6, -1e-12, -1e-100}) {
        double w = lambert_wm1(x);
        CHECK(w <= -1.0);
        CHECK(std::abs(w * std::exp(w) - x) <= 1e-10 * std::abs(x));
    }
    CHECK(lambert_wm1(-1.0 / M_E) == -1.0);
    CHECK_THROWS_AS(lambert_wm1(0.0), std::domain_error);
    CHECK_THROWS_AS(lambert_wm1(0.1), std::domain_error);
    CHECK_THROWS_AS(lambert_wm1(-1.0), std::domain_error);
}

TEST_CASE("lambert_wm1_from_log agrees with the direct form and survives underflow") {
    for (double x : {-0.3, -1e-3, -1e-12}) {
        CHECK(lambert_wm1_from_log(std::log(-x)) == doctest::Approx(lambert_wm1(x)).epsilon(1e-12));
    }
    // log(-x) = -5000: -x underflows double but w + log(-w) = log(-x) still holds
    double w = lambert_wm1_from_log(-5000.0);
    CHECK(w + std::log(-w) == doctest::Approx(-5000.0).epsilon(1e-12));
    CHECK_THROWS_AS(lambert_wm1_from_log(0.0), std::domain_error);
}

TEST_CASE("threshold inputs are validated") {
    CHECK_THROWS_AS(sample_threshold(base_inputs(1, 0.3)), std::invalid_argument);
    auto in = base_inputs(2, 0.3);
    in.delta = 0.0;
    CHECK_THROWS_AS(sample_threshold(in), std::invalid_argument);
    in = base_inputs(2, 0.3);
    in.Delta = 0.0;
    CHECK_THROWS_AS(sample_threshold(in), std::invalid_argument);
    in = base_inputs(2, 0.9);  // outside (1/4, 3/4)
    CHECK_THROWS_AS(sample_threshold(in), std::invalid_argument);
    in = base_inputs(2, 0.3);
    in.C = -1.0;
    CHECK_THROWS_AS(sample_threshold(in), std::invalid_argument);
}

TEST_CASE("each branch fires and matches direct substitution") {
    struct Case {
        int d;
        double theta;
        const char* branch;
    };
    const Case cases[] = {
        {2, 0.40, "d<=3, theta<=1/d"},  {2, 0.60, "d<=3, theta>1/d"},
        {4, 0.20, "d=4, theta<=1/d"},   {4, 0.40, "d=4, theta>1/d"},
        {6, 0.15, "d>=5, theta<=1/d"},  {6, 0.20, "d>=5, theta>1/d"},
    };
    for (const auto& c : cases) {
        auto in = base_inputs(c.d, c.theta);
        auto res = sample_threshold(in);
        CHECK(res.branch == c.branch);
        CHECK_FALSE(res.overflow);
        CHECK(res.n_star >= 1.0);
        CHECK(res.n_star == std::ceil(std::max(res.n1, res.n2)));

        // direct substitution in double arithmetic (magnitudes are moderate
        // for these inputs, so no log-space tricks are needed on this side)
        double d = c.d, th = c.theta;
        double f = 4.0 * (in.L + in.Lbar);
        double A = 512.0 * in.c_d * in.Lbar * in.Lbar * std::pow(f, d) /
                   (in.delta * in.delta * std::pow(in.Delta, d + 2.0));
        double e1 = th <= 1.0 / d ? 1.0 / (2.0 * th) : (d - 1.0) / (1.0 - th);
        CHECK(res.n1 == doctest::Approx(std::pow(A, e1)).epsilon(1e-9));

        double B = in.delta * in.delta * std::pow(in.Delta, d + 2.0) /
                   (512.0 * in.c_d * in.C * f * f);
        if (c.d == 4) {
            // n2 solves log(n) * n^a = B with a < 0
            double a = th <= 1.0 / d ? 0.5 - th * d : 0.5 - d * (1.0 - th) / (d - 1.0);
            CHECK(std::log(res.n2) * std::pow(res.n2, a) == doctest::Approx(B).epsilon(1e-9));
        } else {
            double e2 = c.d <= 3 ? (th <= 1.0 / d ? 2.0 / (1.0 - 2.0 * th * d)
                                                  : 2.0 * (d - 1.0) / (2.0 * th * d - d - 1.0))
                                 : (th <= 1.0 / d ? d / (d - 2.0 - th * d * d)
                                                  : d * (d - 1.0) / (th * d * d - 3.0 * d + 2.0));
            CHECK(res.n2 == doctest::Approx(std::pow(B, e2)).epsilon(1e-9));
        }
    }
}

TEST_CASE("threshold is monotone in the error budget and the margin") {
    for (auto [d, theta] : {std::pair<int, double>{2, 0.40}, {2, 0.60}, {4, 0.20},
                            {4, 0.40}, {6, 0.15}, {6, 0.20}}) {
        double prev = std::numeric_limits<double>::infinity();
        for (double delta : {0.01, 0.05, 0.1, 0.2, 0.5}) {
            auto in = base_inputs(d, theta);
            in.delta = delta;
            auto res = sample_threshold(in);
            CHECK(res.n_star <= prev);
            prev = res.n_star;
        }
        prev = std::numeric_limits<double>::infinity();
        for (double Delta : {0.25, 0.5, 1.0, 2.0}) {
            auto in = base_inputs(d, theta);
            in.Delta = Delta;
            auto res = sample_threshold(in);
            CHECK(res.n_star <= prev);
            prev = res.n_star;
        }
    }
}

TEST_CASE("d=4 with a huge margin makes the transport requirement vacuous") {
    // a*B drops below -1/e: log(n)*n^a <= B holds for every n, so only the
    // grid-resolution requirement remains
    auto in = base_inputs(4, 0.20);
    in.delta = 0.5;
    in.Delta = 4.0;
    auto res = sample_threshold(in);
    CHECK(res.n2 == 1.0);
    CHECK(res.n_star >= 1.0);
}

TEST_CASE("astronomical requirements report overflow instead of garbage") {
    auto in = base_inputs(6, 0.15);
    in.delta = 1e-12;
    in.Delta = 1e-6;
    auto res = sample_threshold(in);
    CHECK(res.overflow);
    CHECK(std::isinf(res.n_star));
}
