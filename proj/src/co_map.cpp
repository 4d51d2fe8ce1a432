#include "qdom/co_map.hpp"

#include <cmath>
#include <stdexcept>

#include "qdom/assignment.hpp"

namespace qdom {

void SampleSet::validate() const {
    if (points.size() < 4) throw std::invalid_argument("SampleSet: need at least 4 points");
    int d = dimension();
    if (d < 2) throw std::invalid_argument("SampleSet: dimension must be >= 2");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != d)
            throw std::invalid_argument("SampleSet: inconsistent dimensions");
        for (double x : p)
            if (!std::isfinite(x)) throw std::invalid_argument("SampleSet: non-finite coordinate");
    }
}

EmpiricalCOMap::EmpiricalCOMap(std::shared_ptr<const AugmentedGrid> grid,
                               std::vector<Vec> oriented_points, std::vector<int> sample_to_grid)
    : grid_(std::move(grid)),
      points_(std::move(oriented_points)),
      sample_to_grid_(std::move(sample_to_grid)) {
    const int n = static_cast<int>(points_.size());
    if (n != grid_->spec.n || n != static_cast<int>(sample_to_grid_.size()))
        throw std::invalid_argument("EmpiricalCOMap: size mismatch");

    grid_to_sample_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int g = sample_to_grid_[i];
        if (g < 0 || g >= n || grid_to_sample_[g] != -1)
            throw std::invalid_argument("EmpiricalCOMap: assignment is not a bijection");
        grid_to_sample_[g] = i;
    }

    const int nR = grid_->spec.nR;
    ranks_.resize(n);
    signs_.resize(n);
    for (int i = 0; i < n; ++i) {
        const Vec& f = forward(i);
        double norm = 0.0;
        for (double x : f) norm += x * x;
        norm = std::sqrt(norm);
        // the grid radii are exact rationals; rounding recovers the shell
        int r = static_cast<int>(std::llround((nR + 1) * norm));
        ranks_[i] = r;
        if (r == 0) {
            signs_[i] = Vec(grid_->spec.d, 0.0);
            origin_samples_.push_back(i);
        } else {
            Vec s(f);
            for (double& x : s) x /= norm;
            signs_[i] = std::move(s);
        }
    }
}

EmpiricalCOMap co_map(const SampleSet& samples, std::shared_ptr<const AugmentedGrid> grid) {
    samples.validate();
    if (samples.dimension() != grid->spec.d)
        throw std::invalid_argument("co_map: sample dimension != grid dimension");
    if (static_cast<int>(samples.points.size()) != grid->spec.n)
        throw std::invalid_argument("co_map: sample count != grid point count");

    std::vector<Vec> oriented = samples.points;
    if (samples.orientation == Orientation::Minimize)
        for (auto& p : oriented)
            for (double& x : p) x = -x;

    auto assignment = solve_assignment(oriented, *grid);
    return EmpiricalCOMap(std::move(grid), std::move(oriented), std::move(assignment));
}

QuantileRegion quantile_region(const EmpiricalCOMap& map, int j) {
    if (j < 0 || j > map.grid().spec.nR)
        throw std::invalid_argument("quantile_region: j out of range");
    QuantileRegion region;
    region.order = static_cast<double>(j) / (map.grid().spec.nR + 1);
    for (int i = 0; i < map.size(); ++i)
        if (map.rank(i) <= j) region.members.push_back(i);
    return region;
}

std::vector<int> quantile_contour(const EmpiricalCOMap& map, int j) {
    if (j < 0 || j > map.grid().spec.nR)
        throw std::invalid_argument("quantile_contour: j out of range");
    std::vector<int> members;
    for (int i = 0; i < map.size(); ++i)
        if (map.rank(i) == j) members.push_back(i);
    return members;
}

}  // namespace qdom
