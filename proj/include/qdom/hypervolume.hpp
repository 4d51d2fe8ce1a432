#ifndef QDOM_HYPERVOLUME_HPP
#define QDOM_HYPERVOLUME_HPP

#include <vector>

#include "qdom/zdt.hpp"

namespace qdom {

struct HVConfig {
    ObjPair ref = {11.0, 11.0};
};

// Exact dominated area of a bi-objective point set (minimization) against a
// reference point. Points not dominating the reference contribute nothing;
// the empty set has hypervolume 0.
double hypervolume_2d(const std::vector<ObjPair>& points, const ObjPair& ref);

// Non-dominated subset under minimization (keeps one copy of duplicates).
std::vector<ObjPair> pareto_filter_2d(const std::vector<ObjPair>& points);

// Gap between the analytic front's hypervolume and the expected hypervolume
// of a population's sampled objective values. sample_blocks[i] holds the
// objective samples of individual i (all blocks the same length); replicate t
// pools the t-th sample of every individual.
double delta_hv(const std::vector<std::vector<ObjPair>>& sample_blocks, const ZdtSpec& spec,
                const HVConfig& hv);

double front_hypervolume(const ZdtSpec& spec, const HVConfig& hv, int front_points = 1000);

}  // namespace qdom

#endif
