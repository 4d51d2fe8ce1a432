#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qdom/zdt.hpp"

using namespace qdom;

namespace {

// Independent transliteration of the five benchmark definitions, kept apart
// from the production code on purpose.
ObjPair zdt_oracle(int variant, const std::vector<double>& x) {
    const int N = static_cast<int>(x.size());
    double f1, g, h;
    switch (variant) {
        case 1: {
            f1 = x[0];
            double s = 0.0;
            for (int i = 1; i < N; ++i) s += x[i];
            g = 1.0 + 9.0 * s / (N - 1);
            h = 1.0 - std::sqrt(f1 / g);
            break;
        }
        case 2: {
            f1 = x[0];
            double s = 0.0;
            for (int i = 1; i < N; ++i) s += x[i];
            g = 1.0 + 9.0 * s / (N - 1);
            h = 1.0 - (f1 / g) * (f1 / g);
            break;
        }
        case 3: {
            f1 = x[0];
            double s = 0.0;
            for (int i = 1; i < N; ++i) s += x[i];
            g = 1.0 + 9.0 * s / (N - 1);
            h = 1.0 - std::sqrt(f1 / g) - (f1 / g) * std::sin(10.0 * M_PI * f1);
            break;
        }
        case 4: {
            f1 = x[0];
            double s = 0.0;
            for (int i = 1; i < N; ++i)
                s += x[i] * x[i] - 10.0 * std::cos(4.0 * M_PI * x[i]);
            g = 1.0 + 10.0 * (N - 1) + s;
            h = 1.0 - std::sqrt(f1 / g);
            break;
        }
        case 6: {
            f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * M_PI * x[0]), 6.0);
            double s = 0.0;
            for (int i = 1; i < N; ++i) s += x[i];
            g = 1.0 + 9.0 * std::pow(s / (N - 1), 0.25);
            h = 1.0 - (f1 / g) * (f1 / g);
            break;
        }
        default:
            throw std::logic_error("unreachable");
    }
    return {f1, g * h};
}

}  // namespace

TEST_CASE("zdt_eval matches an independent transliteration") {
    Rng rng(5);
    for (int variant : {1, 2, 3, 4, 6}) {
        ZdtSpec spec{variant, 10};
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> x(10);
            for (int i = 0; i < 10; ++i) {
                double lo = spec.lower(i), hi = spec.upper(i);
                x[i] = lo + (hi - lo) * rng.uniform();
            }
            auto got = zdt_eval(spec, x);
            auto want = zdt_oracle(variant, x);
            CHECK(got[0] == doctest::Approx(want[0]).epsilon(1e-14));
            CHECK(got[1] == doctest::Approx(want[1]).epsilon(1e-14));
        }
    }
}

TEST_CASE("known reference points") {
    ZdtSpec z1{1, 30};
    auto f = zdt_eval(z1, std::vector<double>(30, 0.0));
    CHECK(f[0] == 0.0);
    CHECK(f[1] == 1.0);

    std::vector<double> x(30, 0.0);
    x[0] = 1.0;
    f = zdt_eval(z1, x);
    CHECK(f[0] == 1.0);
    CHECK(f[1] == doctest::Approx(0.0).epsilon(1e-14));

    // all-ones: g = 10, f2 = 10 (1 - sqrt(1/10))
    f = zdt_eval(z1, std::vector<double>(30, 1.0));
    CHECK(f[1] == doctest::Approx(10.0 * (1.0 - std::sqrt(0.1))).epsilon(1e-14));

    ZdtSpec z6{6, 10};
    f = zdt_eval(z6, std::vector<double>(10, 0.0));
    CHECK(f[0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spec validation and domain boxes") {
    CHECK_THROWS_AS(ZdtSpec({5, 30}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(ZdtSpec({1, 1}).validate(), std::invalid_argument);

    ZdtSpec z4{4, 10};
    CHECK(z4.lower(0) == 0.0);
    CHECK(z4.upper(0) == 1.0);
    CHECK(z4.lower(3) == -5.0);
    CHECK(z4.upper(3) == 5.0);

    CHECK_THROWS_AS(zdt_eval(z4, std::vector<double>(10, 6.0)), std::invalid_argument);
    CHECK_THROWS_AS(zdt_eval(z4, std::vector<double>(5, 0.5)), std::invalid_argument);
}

TEST_CASE("noisy_eval stays defined and collapses at sigma 0") {
    Rng rng(7);
    ZdtSpec spec{4, 10};
    std::vector<double> x(10, 0.0);
    x[0] = 0.3;
    auto clean = zdt_eval(spec, x);
    auto noiseless = noisy_eval(spec, x, 0.0, rng);
    CHECK(noiseless == clean);
    for (int i = 0; i < 500; ++i) {
        auto f = noisy_eval(spec, x, 0.1, rng);
        CHECK(std::isfinite(f[0]));
        CHECK(std::isfinite(f[1]));
    }
}

TEST_CASE("noise spread grows with sigma") {
    Rng rng(11);
    ZdtSpec spec{1, 30};
    std::vector<double> x(30, 0.5);
    auto spread = [&](double sigma) {
        double s = 0.0, sq = 0.0;
        const int N = 4000;
        for (int i = 0; i < N; ++i) {
            double v = noisy_eval(spec, x, sigma, rng)[1];
            s += v;
            sq += v * v;
        }
        return std::sqrt(sq / N - (s / N) * (s / N));
    };
    double s_small = spread(0.02);
    double s_big = spread(0.2);
    CHECK(s_big > 2.0 * s_small);
}

TEST_CASE("analytic fronts have the right shape") {
    // ZDT1: f2 = 1 - sqrt(f1) on [0, 1]
    auto front = analytic_front(ZdtSpec{1, 30}, 101);
    REQUIRE(front.size() == 101);
    for (auto [f1, f2] : front) CHECK(f2 == doctest::Approx(1.0 - std::sqrt(f1)).epsilon(1e-12));
    CHECK(front.front()[0] == 0.0);
    CHECK(front.back()[0] == 1.0);

    // ZDT2: f2 = 1 - f1^2
    for (auto [f1, f2] : analytic_front(ZdtSpec{2, 30}, 64))
        CHECK(f2 == doctest::Approx(1.0 - f1 * f1).epsilon(1e-12));

    // ZDT3: disconnected, every point on the g=1 curve, f1 confined to the
    // published segment endpoints
    auto f3 = analytic_front(ZdtSpec{3, 30}, 200);
    const double seg[5][2] = {{0.0, 0.0830015349},
                              {0.1822287280, 0.2577623634},
                              {0.4093136748, 0.4538821041},
                              {0.6183967944, 0.6525117038},
                              {0.8233317983, 0.8518328654}};
    for (auto [f1, f2] : f3) {
        bool inside = false;
        for (auto& s : seg)
            if (f1 >= s[0] - 1e-12 && f1 <= s[1] + 1e-12) inside = true;
        CHECK(inside);
        CHECK(f2 == doctest::Approx(1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * M_PI * f1))
                        .epsilon(1e-10));
    }

    // ZDT6: f2 = 1 - f1^2 with f1 >= 0.2807753191
    auto f6 = analytic_front(ZdtSpec{6, 10}, 64);
    for (auto [f1, f2] : f6) {
        CHECK(f1 >= 0.2807753191 - 1e-12);
        CHECK(f2 == doctest::Approx(1.0 - f1 * f1).epsilon(1e-10));
    }
}
