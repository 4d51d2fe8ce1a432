#ifndef QDOM_ASSIGNMENT_HPP
#define QDOM_ASSIGNMENT_HPP

#include <vector>

#include "qdom/grid.hpp"

namespace qdom {

// Dense square cost matrix, row-major.
struct CostMatrix {
    int n = 0;
    std::vector<double> cost;  // n*n

    double& at(int i, int j) { return cost[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return cost[static_cast<std::size_t>(i) * n + j]; }
};

// Minimum-cost perfect matching by shortest augmenting paths with dual
// potentials (Jonker-Volgenant style), O(n^3). Rows are augmented in index
// order and column scans run low-to-high, so ties resolve deterministically.
// Returns row -> column.
std::vector<int> solve_assignment(const CostMatrix& m);

// Squared-Euclidean cost between samples (rows) and grid points (columns).
CostMatrix squared_distance_cost(const std::vector<Vec>& samples, const AugmentedGrid& grid);

// Optimal assignment of samples onto grid points, sample i -> grid index.
std::vector<int> solve_assignment(const std::vector<Vec>& samples, const AugmentedGrid& grid);

double assignment_cost(const CostMatrix& m, const std::vector<int>& row_to_col);

}  // namespace qdom

#endif
