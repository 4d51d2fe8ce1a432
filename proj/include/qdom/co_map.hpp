#ifndef QDOM_CO_MAP_HPP
#define QDOM_CO_MAP_HPP

#include <memory>
#include <string>
#include <vector>

#include "qdom/grid.hpp"

namespace qdom {

enum class Orientation { Maximize, Minimize };

struct SampleSet {
    std::string label;
    std::vector<Vec> points;
    Orientation orientation = Orientation::Maximize;

    void validate() const;
    int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

// Empirical center-outward map of one sample set against a shared grid.
// The assignment pairs each sample with one grid point; ranks and signs are
// read off the assigned point. Q(grid index) gives the sample sitting on that
// grid point, i.e. the empirical quantile value.
class EmpiricalCOMap {
public:
    EmpiricalCOMap(std::shared_ptr<const AugmentedGrid> grid, std::vector<Vec> oriented_points,
                   std::vector<int> sample_to_grid);

    const AugmentedGrid& grid() const { return *grid_; }
    std::shared_ptr<const AugmentedGrid> grid_ptr() const { return grid_; }
    int size() const { return static_cast<int>(points_.size()); }

    // Sample points in working (maximize) orientation.
    const std::vector<Vec>& points() const { return points_; }

    int grid_index_of(int sample) const { return sample_to_grid_[sample]; }
    int sample_at_grid(int grid_index) const { return grid_to_sample_[grid_index]; }

    // F-hat: the grid point assigned to a sample.
    const Vec& forward(int sample) const { return grid_->points[sample_to_grid_[sample]]; }
    // Q-hat at shell k (1..nR), direction s: the sample assigned there.
    const Vec& quantile(int k, int s) const {
        return points_[grid_to_sample_[grid_->point_index(k, s)]];
    }

    int rank(int sample) const { return ranks_[sample]; }
    const Vec& sign(int sample) const { return signs_[sample]; }
    const std::vector<int>& ranks() const { return ranks_; }

    // Samples assigned to origin copies (rank 0).
    const std::vector<int>& origin_samples() const { return origin_samples_; }

    bool shares_frame_with(const EmpiricalCOMap& other) const {
        return grid_ == other.grid_ || grid_->same_frame(*other.grid_);
    }

private:
    std::shared_ptr<const AugmentedGrid> grid_;
    std::vector<Vec> points_;
    std::vector<int> sample_to_grid_;
    std::vector<int> grid_to_sample_;
    std::vector<int> ranks_;
    std::vector<Vec> signs_;
    std::vector<int> origin_samples_;
};

// Solve the optimal assignment of the samples onto the grid and assemble the
// empirical center-outward map. Minimization orientation negates all
// coordinates at ingestion (dominance semantics are larger-is-better).
EmpiricalCOMap co_map(const SampleSet& samples, std::shared_ptr<const AugmentedGrid> grid);

struct QuantileRegion {
    double order = 0.0;         // j/(nR+1)
    std::vector<int> members;   // sample indices with rank <= j
};

QuantileRegion quantile_region(const EmpiricalCOMap& map, int j);
std::vector<int> quantile_contour(const EmpiricalCOMap& map, int j);  // rank == j

}  // namespace qdom

#endif
