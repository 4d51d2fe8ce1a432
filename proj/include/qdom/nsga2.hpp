#ifndef QDOM_NSGA2_HPP
#define QDOM_NSGA2_HPP

#include <utility>
#include <vector>

#include "qdom/rng.hpp"

namespace qdom {

struct VariationParams {
    double eta_c = 15.0;  // SBX distribution index
    double p_c = 0.9;     // crossover probability (per pair)
    double eta_m = 20.0;  // mutation distribution index
    double p_m = 0.0;     // mutation probability per variable; 0 means 1/N
};

// Simulated binary crossover with variable bounds; offspring are clamped.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    const std::vector<double>& p1, const std::vector<double>& p2,
    const std::vector<double>& lower, const std::vector<double>& upper, double eta_c, double p_c,
    Rng& rng);

std::vector<double> polynomial_mutation(const std::vector<double>& x,
                                        const std::vector<double>& lower,
                                        const std::vector<double>& upper, double eta_m, double p_m,
                                        Rng& rng);

// Fast non-dominated sort on objective vectors (minimization, non-strict
// Pareto dominance: no worse in all, better in at least one).
std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<std::vector<double>>& objs);

// Crowding distance for one front; extremes get +infinity.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& objs,
                                      const std::vector<int>& front);

}  // namespace qdom

#endif
