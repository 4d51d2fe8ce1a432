#ifndef QDOM_GRID_HPP
#define QDOM_GRID_HPP

#include <cstdint>
#include <vector>

namespace qdom {

using Vec = std::vector<double>;

// Factorization n = nR*nS + n0 plus the parameters the grid is built from.
struct GridSpec {
    int n = 0;        // total point count, nR*nS + n0
    int d = 2;        // ambient dimension, >= 2
    int nR = 0;       // radial shells
    int nS = 0;       // directions per shell
    int n0 = 0;       // copies of the origin, 0 <= n0 < min(nR, nS)
    double theta = 0.5;
    std::uint64_t seed = 0;  // direction generation (d >= 3)

    void validate() const;
};

// Discretization of the uniform law on the closed unit ball: nR shells of nS
// directions at radii k/(nR+1), plus n0 origin copies. Shared reference frame
// for every center-outward map that compares against another.
struct AugmentedGrid {
    GridSpec spec;
    std::vector<Vec> directions;  // nS unit vectors
    std::vector<Vec> points;      // nR*nS + n0 points, shell-major then origin

    // Index of the grid point at shell k (1..nR), direction s (0..nS-1).
    int point_index(int k, int s) const { return (k - 1) * spec.nS + s; }
    // Shell of a grid point; 0 for origin copies.
    int shell_of(int index) const {
        return index < spec.nR * spec.nS ? index / spec.nS + 1 : 0;
    }
    int direction_of(int index) const {
        return index < spec.nR * spec.nS ? index % spec.nS : -1;
    }
    double radius_of(int index) const {
        return static_cast<double>(shell_of(index)) / (spec.nR + 1);
    }

    bool same_frame(const AugmentedGrid& other) const;
};

// Admissible interval for the radial exponent theta at dimension d.
// (1/(2d), (d+1)/(2d)) for d <= 4 and ((d-2)/d^2, (2d-3)/d^2) for d >= 5.
std::pair<double, double> theta_interval(int d);

// Midpoint of the admissible interval; the default radial exponent.
double default_theta(int d);

// Factorize n into (nR, nS, n0) with nR near n^theta, preferring n0 = 0 among
// nearby candidates. Throws on n < 4, d < 2, or theta outside the admissible
// interval.
struct Factorization {
    int nR, nS, n0;
};
Factorization factorize(int n, int d, double theta);
inline Factorization factorize(int n, int d) { return factorize(n, d, default_theta(d)); }

// nS pairwise-distinct unit vectors in dimension d, deterministic in
// (nS, d, seed). d=2: equally spaced angles starting at (1,0). d=3: Fibonacci
// sphere. d>=4: seeded Gaussian directions with a minimum-angle repair pass.
std::vector<Vec> unit_directions(int nS, int d, std::uint64_t seed);

AugmentedGrid build_grid(const GridSpec& spec);

// Convenience: factorize + build in one step.
AugmentedGrid make_grid(int n, int d, double theta, std::uint64_t seed);

}  // namespace qdom

#endif
