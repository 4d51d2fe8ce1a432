#include "qdom/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdom {

std::vector<int> solve_assignment(const CostMatrix& m) {
    const int n = m.n;
    if (n <= 0) throw std::invalid_argument("solve_assignment: empty cost matrix");
    const double INF = std::numeric_limits<double>::infinity();

    // 1-based internally; p[j] is the row matched to column j, p[0] the row
    // currently being augmented.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), INF);
        std::fill(used.begin(), used.end(), char(0));
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            double delta = INF;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = m.at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        // augment along the alternating path
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

CostMatrix squared_distance_cost(const std::vector<Vec>& samples, const AugmentedGrid& grid) {
    const int n = static_cast<int>(samples.size());
    if (n != grid.spec.n)
        throw std::invalid_argument("squared_distance_cost: sample count != grid point count");
    const int d = grid.spec.d;
    CostMatrix m;
    m.n = n;
    m.cost.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(samples[i].size()) != d)
            throw std::invalid_argument("squared_distance_cost: sample dimension mismatch");
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int c = 0; c < d; ++c) {
                double diff = samples[i][c] - grid.points[j][c];
                s += diff * diff;
            }
            m.at(i, j) = s;
        }
    }
    return m;
}

std::vector<int> solve_assignment(const std::vector<Vec>& samples, const AugmentedGrid& grid) {
    return solve_assignment(squared_distance_cost(samples, grid));
}

double assignment_cost(const CostMatrix& m, const std::vector<int>& row_to_col) {
    double total = 0.0;
    for (int i = 0; i < m.n; ++i) total += m.at(i, row_to_col[i]);
    return total;
}

}  // namespace qdom
