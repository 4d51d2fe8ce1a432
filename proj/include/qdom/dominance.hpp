#ifndef QDOM_DOMINANCE_HPP
#define QDOM_DOMINANCE_HPP

#include <vector>

#include "qdom/co_map.hpp"

namespace qdom {

// Per-shell pairwise dominance fractions. D[k][i][j] is the fraction of
// directions at shell k (1..nR) where candidate i's quantile value dominates
// candidate j's componentwise; the diagonal is forced to zero.
struct DominanceTensor {
    int nR = 0;
    int nS = 0;
    int m = 0;
    std::vector<double> d;  // [k-1][i][j], k = 1..nR

    double& at(int k, int i, int j) {
        return d[(static_cast<std::size_t>(k - 1) * m + i) * m + j];
    }
    double at(int k, int i, int j) const {
        return d[(static_cast<std::size_t>(k - 1) * m + i) * m + j];
    }
};

struct FrontOrdering {
    // Candidate indices grouped into fronts, best first; within a front,
    // ordered by increasing closeness-to-domination score.
    std::vector<std::vector<int>> fronts;
    std::vector<std::vector<double>> scores;  // parallel to fronts
    bool ties_allowed = false;

    int front_of(int candidate) const;
};

// Does mapX dominate mapY at every empirical quantile level up to shell k?
// Level 0 compares origin-assigned samples (vacuous when n0 = 0, all-pairs
// when n0 >= 2); levels 1..k compare quantile values direction by direction.
bool dominates_up_to(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY, int k);

// Same check addressed by quantile value; q must sit on the empirical lattice
// {0, 1/(nR+1), ..., nR/(nR+1)} to within 1e-9.
bool dominates_at(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY, double q);

// Largest shell k with dominates_up_to(mapX, mapY, k); -1 when the relation
// fails at the first meaningful level (shell 1 when n0 = 0, level 0 otherwise).
int max_dominated_quantile(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY);

DominanceTensor dominance_tensor(const std::vector<EmpiricalCOMap>& maps);

// Front construction by sweeping the dominance tensor over successively
// smaller quantile ranges, then ordering within fronts by how close each
// candidate is to being dominated.
FrontOrdering q_sort(const DominanceTensor& tensor, bool ties = false);

}  // namespace qdom

#endif
