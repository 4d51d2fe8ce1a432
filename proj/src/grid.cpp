#include "qdom/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "qdom/rng.hpp"

namespace qdom {

void GridSpec::validate() const {
    if (d < 2) throw std::invalid_argument("GridSpec: d must be >= 2");
    if (nR < 1 || nS < 1) throw std::invalid_argument("GridSpec: nR and nS must be >= 1");
    if (n != nR * nS + n0) throw std::invalid_argument("GridSpec: n != nR*nS + n0");
    if (n0 < 0 || n0 >= std::min(nR, nS))
        throw std::invalid_argument("GridSpec: requires 0 <= n0 < min(nR, nS)");
}

bool AugmentedGrid::same_frame(const AugmentedGrid& other) const {
    if (this == &other) return true;
    if (spec.n != other.spec.n || spec.d != other.spec.d || spec.nR != other.spec.nR ||
        spec.nS != other.spec.nS || spec.n0 != other.spec.n0)
        return false;
    return directions == other.directions;
}

std::pair<double, double> theta_interval(int d) {
    if (d < 2) throw std::invalid_argument("theta_interval: d must be >= 2");
    if (d <= 4) return {1.0 / (2.0 * d), (d + 1.0) / (2.0 * d)};
    return {(d - 2.0) / (d * double(d)), (2.0 * d - 3.0) / (d * double(d))};
}

double default_theta(int d) {
    auto [lo, hi] = theta_interval(d);
    return 0.5 * (lo + hi);
}

namespace {

bool valid_factorization(int n, int nR, Factorization& out) {
    if (nR < 1 || nR > n) return false;
    int nS = n / nR;
    int n0 = n - nR * nS;
    if (nS < 1 || n0 >= std::min(nR, nS)) return false;
    out = {nR, nS, n0};
    return true;
}

}  // namespace

Factorization factorize(int n, int d, double theta) {
    if (n < 4) throw std::invalid_argument("factorize: n must be >= 4");
    auto [lo, hi] = theta_interval(d);
    if (!(theta > lo && theta < hi))
        throw std::invalid_argument("factorize: theta outside the admissible interval");

    int target = std::clamp(static_cast<int>(std::llround(std::pow(double(n), theta))), 1, n);

    // Take the valid factorization with nR closest to the target; at equal
    // distance prefer n0 = 0, then the smaller nR. nR = 1 always validates
    // (nS = n, n0 = 0), so the search terminates.
    for (int dist = 0; dist < n; ++dist) {
        Factorization down{}, up{};
        bool has_down = target - dist >= 1 && valid_factorization(n, target - dist, down);
        bool has_up = dist > 0 && target + dist <= n && valid_factorization(n, target + dist, up);
        if (has_down && has_up) return up.n0 < down.n0 ? up : down;
        if (has_down) return down;
        if (has_up) return up;
    }
    throw std::logic_error("factorize: unreachable");
}

namespace {

std::vector<Vec> directions_2d(int nS) {
    std::vector<Vec> dirs(nS);
    // for even nS the second half mirrors the first, so antipodal pairs
    // cancel exactly in floating point
    int half = nS % 2 == 0 ? nS / 2 : nS;
    for (int j = 0; j < half; ++j) {
        double phi = 2.0 * M_PI * j / nS;
        dirs[j] = {std::cos(phi), std::sin(phi)};
    }
    for (int j = half; j < nS; ++j) dirs[j] = {-dirs[j - half][0], -dirs[j - half][1]};
    return dirs;
}

std::vector<Vec> directions_fibonacci_3d(int nS) {
    // Fibonacci-sphere lattice: evenly spread points for any nS.
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Vec> dirs(nS);
    for (int i = 0; i < nS; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / nS;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = golden_angle * i;
        dirs[i] = {r * std::cos(phi), r * std::sin(phi), z};
    }
    return dirs;
}

Vec random_unit(int d, Rng& rng) {
    Vec v(d);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (int i = 0; i < d; ++i) {
            v[i] = rng.normal();
            norm2 += v[i] * v[i];
        }
    } while (norm2 < 1e-24);
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v) x *= inv;
    return v;
}

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Vec> directions_sampled(int nS, int d, std::uint64_t seed) {
    Rng rng = Rng::substream(seed, 0x6469726eULL, static_cast<std::uint64_t>(d), nS);
    std::vector<Vec> dirs;
    dirs.reserve(nS);
    for (int i = 0; i < nS; ++i) dirs.push_back(random_unit(d, rng));

    // Repair pass: resample any vector nearly coincident with an earlier one.
    const double max_dot = 1.0 - 1e-9;
    for (int i = 1; i < nS; ++i) {
        int attempts = 0;
        bool clash = true;
        while (clash && attempts < 10000) {
            clash = false;
            for (int j = 0; j < i; ++j) {
                if (dot(dirs[i], dirs[j]) >= max_dot) {
                    dirs[i] = random_unit(d, rng);
                    clash = true;
                    ++attempts;
                    break;
                }
            }
        }
        if (clash) throw std::runtime_error("unit_directions: could not separate directions");
    }
    return dirs;
}

}  // namespace

std::vector<Vec> unit_directions(int nS, int d, std::uint64_t seed) {
    if (nS < 1) throw std::invalid_argument("unit_directions: nS must be >= 1");
    if (d < 2) throw std::invalid_argument("unit_directions: d must be >= 2");
    if (d == 2) return directions_2d(nS);
    if (d == 3) return directions_fibonacci_3d(nS);
    return directions_sampled(nS, d, seed);
}

AugmentedGrid build_grid(const GridSpec& spec) {
    spec.validate();
    AugmentedGrid grid;
    grid.spec = spec;
    grid.directions = unit_directions(spec.nS, spec.d, spec.seed);
    grid.points.reserve(spec.n);
    for (int k = 1; k <= spec.nR; ++k) {
        double r = static_cast<double>(k) / (spec.nR + 1);
        for (int s = 0; s < spec.nS; ++s) {
            Vec p(spec.d);
            for (int i = 0; i < spec.d; ++i) p[i] = r * grid.directions[s][i];
            grid.points.push_back(std::move(p));
        }
    }
    for (int i = 0; i < spec.n0; ++i) grid.points.emplace_back(spec.d, 0.0);
    return grid;
}

AugmentedGrid make_grid(int n, int d, double theta, std::uint64_t seed) {
    auto f = factorize(n, d, theta);
    GridSpec spec;
    spec.n = n;
    spec.d = d;
    spec.nR = f.nR;
    spec.nS = f.nS;
    spec.n0 = f.n0;
    spec.theta = theta;
    spec.seed = seed;
    return build_grid(spec);
}

}  // namespace qdom
