#ifndef QDOM_ZDT_HPP
#define QDOM_ZDT_HPP

#include <array>
#include <utility>
#include <vector>

#include "qdom/rng.hpp"

namespace qdom {

using ObjPair = std::array<double, 2>;

// Bi-objective ZDT test problem (variants 1, 2, 3, 4, 6; variant 5 is a
// Boolean problem and is not representable here).
struct ZdtSpec {
    int variant = 1;
    int N = 30;  // decision dimension

    void validate() const;
    double lower(int i) const;
    double upper(int i) const;
};

// Deterministic objective values; throws on out-of-box input.
ObjPair zdt_eval(const ZdtSpec& spec, const std::vector<double>& z);

// Perturb each coordinate with a truncated normal inside its box, then
// evaluate; the deterministic function never sees out-of-domain inputs.
ObjPair noisy_eval(const ZdtSpec& spec, const std::vector<double>& x, double sigma, Rng& rng);

// The analytic Pareto front sampled at `count` points, f1-uniform per segment.
// ZDT3 uses its disconnected f1 intervals, ZDT6 its restricted f1 range.
std::vector<ObjPair> analytic_front(const ZdtSpec& spec, int count = 1000);

}  // namespace qdom

#endif
