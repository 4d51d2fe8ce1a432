#include "qdom/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdom {

std::vector<ObjPair> pareto_filter_2d(const std::vector<ObjPair>& points) {
    std::vector<ObjPair> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    std::vector<ObjPair> front;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& p : sorted) {
        if (p[1] < best_f2) {
            front.push_back(p);
            best_f2 = p[1];
        }
    }
    return front;
}

double hypervolume_2d(const std::vector<ObjPair>& points, const ObjPair& ref) {
    std::vector<ObjPair> inside;
    inside.reserve(points.size());
    for (const auto& p : points) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
            throw std::invalid_argument("hypervolume_2d: non-finite point");
        if (p[0] <= ref[0] && p[1] <= ref[1]) inside.push_back(p);
    }
    auto front = pareto_filter_2d(inside);
    double hv = 0.0;
    for (std::size_t i = 0; i < front.size(); ++i) {
        double next_f1 = (i + 1 < front.size()) ? front[i + 1][0] : ref[0];
        hv += (next_f1 - front[i][0]) * (ref[1] - front[i][1]);
    }
    return hv;
}

double front_hypervolume(const ZdtSpec& spec, const HVConfig& hv, int front_points) {
    return hypervolume_2d(analytic_front(spec, front_points), hv.ref);
}

double delta_hv(const std::vector<std::vector<ObjPair>>& sample_blocks, const ZdtSpec& spec,
                const HVConfig& hv) {
    double target = front_hypervolume(spec, hv);
    if (sample_blocks.empty()) return target;

    std::size_t replicates = sample_blocks.front().size();
    for (const auto& block : sample_blocks)
        if (block.size() != replicates)
            throw std::invalid_argument("delta_hv: ragged sample blocks");
    if (replicates == 0) return target;

    double mean_hv = 0.0;
    std::vector<ObjPair> pts(sample_blocks.size());
    for (std::size_t t = 0; t < replicates; ++t) {
        for (std::size_t i = 0; i < sample_blocks.size(); ++i) pts[i] = sample_blocks[i][t];
        mean_hv += hypervolume_2d(pts, hv.ref);
    }
    mean_hv /= static_cast<double>(replicates);
    return target - mean_hv;
}

}  // namespace qdom
