#include <doctest.h>

#include <memory>

#include "qdom/dominance.hpp"
#include "test_helpers.hpp"

using namespace qdom;

namespace {

std::shared_ptr<const AugmentedGrid> grid64() {
    static auto g = std::make_shared<const AugmentedGrid>(build_grid(GridSpec{64, 2, 8, 8, 0, 0.5, 0}));
    return g;
}

SampleSet set_of(std::vector<Vec> pts) {
    SampleSet s;
    s.label = "test";
    s.points = std::move(pts);
    return s;
}

std::vector<Vec> shift(std::vector<Vec> pts, double dx) {
    for (auto& p : pts)
        for (auto& x : p) x += dx;
    return pts;
}

}  // namespace

TEST_CASE("a large uniform shift dominates at every quantile level") {
    Rng rng(31);
    auto grid = grid64();
    auto base = test::gaussian_samples(64, 2, rng);
    auto mapY = co_map(set_of(base), grid);
    auto mapX = co_map(set_of(shift(base, 10.0)), grid);

    for (int k = 0; k <= 8; ++k) CHECK(dominates_up_to(mapX, mapY, k));
    CHECK(max_dominated_quantile(mapX, mapY) == 8);
    CHECK(max_dominated_quantile(mapY, mapX) == -1);
    // quantile-level addressing agrees with shell addressing
    CHECK(dominates_at(mapX, mapY, 8.0 / 9.0));
    CHECK_FALSE(dominates_at(mapY, mapX, 1.0 / 9.0));
    CHECK_THROWS_AS(dominates_at(mapX, mapY, 0.5), std::invalid_argument);
}

TEST_CASE("every map dominates itself up to the outermost shell") {
    Rng rng(37);
    auto grid = grid64();
    auto map = co_map(set_of(test::gaussian_samples(64, 2, rng)), grid);
    CHECK(max_dominated_quantile(map, map) == 8);
}

TEST_CASE("maps built on different frames are rejected") {
    Rng rng(41);
    auto a = std::make_shared<const AugmentedGrid>(build_grid(GridSpec{64, 2, 8, 8, 0, 0.5, 0}));
    auto b = std::make_shared<const AugmentedGrid>(build_grid(GridSpec{12, 2, 3, 4, 0, 0.45, 0}));
    auto mapA = co_map(set_of(test::gaussian_samples(64, 2, rng)), a);
    auto mapB = co_map(set_of(test::gaussian_samples(12, 2, rng)), b);
    CHECK_THROWS_AS(dominates_up_to(mapA, mapB, 1), std::invalid_argument);
}

TEST_CASE("two interleaved clusters do not dominate at the top quantile") {
    // Cluster A spreads along the x axis, cluster B along y; each wins some
    // directions on the outer shell, so neither relation holds there.
    Rng rng(43);
    auto grid = grid64();
    std::vector<Vec> a, b;
    for (int i = 0; i < 64; ++i) {
        a.push_back({3.0 * rng.normal(), 0.3 * rng.normal()});
        b.push_back({0.3 * rng.normal(), 3.0 * rng.normal()});
    }
    auto mapA = co_map(set_of(a), grid);
    auto mapB = co_map(set_of(b), grid);
    CHECK_FALSE(dominates_up_to(mapA, mapB, 8));
    CHECK_FALSE(dominates_up_to(mapB, mapA, 8));
}

TEST_CASE("level 0 compares all origin pairs") {
    auto grid = std::make_shared<const AugmentedGrid>(build_grid(GridSpec{14, 2, 3, 4, 2, 0.45, 0}));
    Rng rng(47);
    auto base = test::gaussian_samples(14, 2, rng);
    auto mapY = co_map(set_of(base), grid);
    auto mapX = co_map(set_of(shift(base, 10.0)), grid);
    CHECK(dominates_up_to(mapX, mapY, 0));
    CHECK_FALSE(dominates_up_to(mapY, mapX, 0));
    CHECK(max_dominated_quantile(mapY, mapX) == -1);
}

TEST_CASE("dominance tensor is a lattice fraction with a zero diagonal") {
    Rng rng(53);
    auto grid = grid64();
    std::vector<EmpiricalCOMap> maps;
    auto base = test::gaussian_samples(64, 2, rng);
    maps.push_back(co_map(set_of(base), grid));
    maps.push_back(co_map(set_of(shift(base, 10.0)), grid));
    maps.push_back(co_map(set_of(test::gaussian_samples(64, 2, rng)), grid));

    auto t = dominance_tensor(maps);
    CHECK(t.m == 3);
    CHECK(t.nR == 8);
    for (int k = 1; k <= 8; ++k) {
        for (int i = 0; i < 3; ++i) {
            CHECK(t.at(k, i, i) == 0.0);
            for (int j = 0; j < 3; ++j) {
                double v = t.at(k, i, j) * 8.0;
                CHECK(v == doctest::Approx(std::llround(v)).epsilon(1e-12));
            }
        }
        // the shifted copy wins every direction against its base
        CHECK(t.at(k, 1, 0) == 1.0);
        CHECK(t.at(k, 0, 1) == 0.0);
    }
}

TEST_CASE("q_sort separates a dominated pair") {
    Rng rng(59);
    auto grid = grid64();
    auto base = test::gaussian_samples(64, 2, rng);
    std::vector<EmpiricalCOMap> maps;
    maps.push_back(co_map(set_of(shift(base, 10.0)), grid));
    maps.push_back(co_map(set_of(base), grid));

    auto order = q_sort(dominance_tensor(maps));
    REQUIRE(order.fronts.size() == 2);
    CHECK(order.fronts[0] == std::vector<int>{0});
    CHECK(order.fronts[1] == std::vector<int>{1});
    CHECK(order.front_of(0) == 0);
    CHECK(order.front_of(1) == 1);
}

TEST_CASE("q_sort matches the transliterated reference on random tensors") {
    Rng rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 2 + static_cast<int>(rng.next_u64() % 5);
        int nR = 1 + static_cast<int>(rng.next_u64() % 5);
        int nS = 4;
        auto t = test::random_tensor(m, nR, nS, rng);
        auto got = q_sort(t);
        auto want = test::q_sort_reference(t);
        CHECK(got.fronts == want);
    }
}

TEST_CASE("q_sort scores order a front from safest to closest to dominated") {
    Rng rng(67);
    auto t = test::random_tensor(5, 3, 8, rng);
    auto order = q_sort(t);
    for (const auto& s : order.scores) {
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] <= s[i]);
    }
    // fronts partition the candidates
    std::vector<char> seen(5, 0);
    for (const auto& f : order.fronts)
        for (int j : f) {
            CHECK(!seen[j]);
            seen[j] = 1;
        }
    for (char c : seen) CHECK(c == 1);
}

TEST_CASE("monotone coupling bounds the dominance relation") {
    // If X = Y + delta componentwise sample by sample, X must dominate Y at
    // least up to the shells where the shift exceeds the assignment jitter;
    // with a huge shift that is all of them.
    Rng rng(71);
    auto grid = grid64();
    for (int trial = 0; trial < 10; ++trial) {
        auto base = test::gaussian_samples(64, 2, rng);
        auto lifted = base;
        for (auto& p : lifted) {
            p[0] += 25.0 + rng.uniform();
            p[1] += 25.0 + rng.uniform();
        }
        auto mapY = co_map(set_of(base), grid);
        auto mapX = co_map(set_of(lifted), grid);
        CHECK(max_dominated_quantile(mapX, mapY) == 8);
    }
}
