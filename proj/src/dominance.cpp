#include "qdom/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qdom {

namespace {

bool geq_componentwise(const Vec& a, const Vec& b) {
    for (std::size_t c = 0; c < a.size(); ++c)
        if (a[c] < b[c]) return false;
    return true;
}

void require_shared_frame(const EmpiricalCOMap& a, const EmpiricalCOMap& b) {
    if (!a.shares_frame_with(b))
        throw std::invalid_argument("dominance: maps do not share an augmented grid");
}

// Rank-0 comparison: every origin-assigned X sample must dominate every
// origin-assigned Y sample. Vacuously true when n0 = 0.
bool level0_holds(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY) {
    for (int xi : mapX.origin_samples())
        for (int yi : mapY.origin_samples())
            if (!geq_componentwise(mapX.points()[xi], mapY.points()[yi])) return false;
    return true;
}

}  // namespace

int FrontOrdering::front_of(int candidate) const {
    for (std::size_t f = 0; f < fronts.size(); ++f)
        for (int j : fronts[f])
            if (j == candidate) return static_cast<int>(f);
    return -1;
}

bool dominates_up_to(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY, int k) {
    require_shared_frame(mapX, mapY);
    const auto& spec = mapX.grid().spec;
    if (k < 0 || k > spec.nR) throw std::invalid_argument("dominates_up_to: k out of range");
    if (!level0_holds(mapX, mapY)) return false;
    for (int shell = 1; shell <= k; ++shell)
        for (int s = 0; s < spec.nS; ++s)
            if (!geq_componentwise(mapX.quantile(shell, s), mapY.quantile(shell, s)))
                return false;
    return true;
}

bool dominates_at(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY, double q) {
    const auto& spec = mapX.grid().spec;
    double scaled = q * (spec.nR + 1);
    int k = static_cast<int>(std::llround(scaled));
    if (std::abs(scaled - k) > 1e-9 || k < 0 || k > spec.nR)
        throw std::invalid_argument("dominates_at: q is not on the empirical quantile lattice");
    return dominates_up_to(mapX, mapY, k);
}

int max_dominated_quantile(const EmpiricalCOMap& mapX, const EmpiricalCOMap& mapY) {
    require_shared_frame(mapX, mapY);
    const auto& spec = mapX.grid().spec;
    int first = spec.n0 > 0 ? 0 : 1;
    int best = -1;
    for (int k = first; k <= spec.nR; ++k) {
        if (!dominates_up_to(mapX, mapY, k)) break;
        best = k;
    }
    return best;
}

DominanceTensor dominance_tensor(const std::vector<EmpiricalCOMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("dominance_tensor: need at least one map");
    for (const auto& m : maps) require_shared_frame(maps.front(), m);
    const auto& spec = maps.front().grid().spec;

    DominanceTensor t;
    t.nR = spec.nR;
    t.nS = spec.nS;
    t.m = static_cast<int>(maps.size());
    t.d.assign(static_cast<std::size_t>(t.nR) * t.m * t.m, 0.0);

    for (int k = 1; k <= t.nR; ++k) {
        for (int i = 0; i < t.m; ++i) {
            for (int j = 0; j < t.m; ++j) {
                if (i == j) continue;
                int count = 0;
                for (int s = 0; s < t.nS; ++s)
                    if (geq_componentwise(maps[i].quantile(k, s), maps[j].quantile(k, s)))
                        ++count;
                t.at(k, i, j) = static_cast<double>(count) / t.nS;
            }
        }
    }
    return t;
}

FrontOrdering q_sort(const DominanceTensor& tensor, bool ties) {
    const int m = tensor.m;
    const int nR = tensor.nR;

    FrontOrdering out;
    out.ties_allowed = ties;

    std::vector<int> pool(m);  // the candidate set C; shrinks only on c-reset
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<char> assigned(m, 0);
    int remaining = m;
    int c = 0;

    while (remaining > 0) {
        std::vector<int> front;
        std::vector<double> front_scores;
        for (int j : pool) {
            if (assigned[j]) continue;
            bool dominated = false;
            for (int k = 1; k <= nR - c && !dominated; ++k)
                for (int i : pool)
                    if (tensor.at(k, i, j) == 1.0) {
                        dominated = true;
                        break;
                    }
            if (dominated) continue;
            double score = 0.0;
            for (int k = 1; k <= nR - c; ++k)
                for (int i : pool) score += tensor.at(k, i, j);
            front.push_back(j);
            front_scores.push_back(score);
        }

        // order within the front by increasing score, index as tie-break
        std::vector<int> order(front.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (front_scores[a] != front_scores[b]) return front_scores[a] < front_scores[b];
            return front[a] < front[b];
        });

        if (!front.empty()) {
            std::vector<int> sorted;
            std::vector<double> sorted_scores;
            for (int idx : order) {
                sorted.push_back(front[idx]);
                sorted_scores.push_back(front_scores[idx]);
                assigned[front[idx]] = 1;
                --remaining;
            }
            out.fronts.push_back(std::move(sorted));
            out.scores.push_back(std::move(sorted_scores));
        }

        if (c == nR) {
            c = 0;
            std::erase_if(pool, [&](int j) { return assigned[j]; });
        } else {
            ++c;
        }
    }
    return out;
}

}  // namespace qdom
