#ifndef QDOM_RANKING_HPP
#define QDOM_RANKING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdom/co_map.hpp"
#include "qdom/dominance.hpp"

namespace qdom {

enum class GridPolicy { TheoremTheta, RootD };

GridPolicy parse_policy(const std::string& name);

struct RankRequest {
    std::vector<SampleSet> candidates;
    int subsample = 0;    // k points per candidate per repetition; 0 = use all
    int repetitions = 1;
    GridPolicy policy = GridPolicy::TheoremTheta;
    double theta = 0.0;   // 0 = default for the dimension
    bool ties = false;
    std::uint64_t seed = 0;
};

struct RankReport {
    GridSpec grid;
    std::vector<std::string> labels;
    std::vector<double> mean_rank;  // 1-based front index averaged over reps
    std::vector<double> stddev_rank;
    FrontOrdering last_fronts;                       // final repetition
    std::vector<double> last_scores;                 // per candidate
    std::map<std::string, int> max_dominated;        // "A|B" -> k*
};

// Repeatedly subsample, build a shared grid, map every candidate, and sort
// by q-dominance; reports per-candidate mean front index across repetitions.
RankReport rank_samples(const RankRequest& req);

// Grid factorization under the requested policy for n samples of dimension d.
GridSpec rank_grid_spec(int n, int d, GridPolicy policy, double theta, std::uint64_t seed);

std::string rank_report_json(const RankReport& report);

}  // namespace qdom

#endif
