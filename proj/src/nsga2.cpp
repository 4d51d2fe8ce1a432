#include "qdom/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qdom {

namespace {
constexpr double kEps = 1e-14;

double clampv(double x, double lo, double hi) { return std::clamp(x, lo, hi); }
}  // namespace

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    const std::vector<double>& p1, const std::vector<double>& p2,
    const std::vector<double>& lower, const std::vector<double>& upper, double eta_c, double p_c,
    Rng& rng) {
    if (p1.size() != p2.size() || p1.size() != lower.size() || p1.size() != upper.size())
        throw std::invalid_argument("sbx_crossover: size mismatch");

    std::vector<double> c1 = p1, c2 = p2;
    if (rng.uniform() > p_c) return {c1, c2};

    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (rng.uniform() > 0.5) continue;
        double y1 = p1[i], y2 = p2[i];
        if (std::abs(y1 - y2) <= kEps) continue;
        if (y1 > y2) std::swap(y1, y2);
        double yl = lower[i], yu = upper[i];
        double u = rng.uniform();

        double beta = 1.0 + 2.0 * (y1 - yl) / (y2 - y1);
        double alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
        double betaq = (u <= 1.0 / alpha)
                           ? std::pow(u * alpha, 1.0 / (eta_c + 1.0))
                           : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
        double child1 = 0.5 * ((y1 + y2) - betaq * (y2 - y1));

        beta = 1.0 + 2.0 * (yu - y2) / (y2 - y1);
        alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
        betaq = (u <= 1.0 / alpha) ? std::pow(u * alpha, 1.0 / (eta_c + 1.0))
                                   : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
        double child2 = 0.5 * ((y1 + y2) + betaq * (y2 - y1));

        child1 = clampv(child1, yl, yu);
        child2 = clampv(child2, yl, yu);
        if (rng.uniform() <= 0.5) std::swap(child1, child2);
        c1[i] = child1;
        c2[i] = child2;
    }
    return {c1, c2};
}

std::vector<double> polynomial_mutation(const std::vector<double>& x,
                                        const std::vector<double>& lower,
                                        const std::vector<double>& upper, double eta_m, double p_m,
                                        Rng& rng) {
    if (x.size() != lower.size() || x.size() != upper.size())
        throw std::invalid_argument("polynomial_mutation: size mismatch");
    if (p_m <= 0.0) p_m = 1.0 / static_cast<double>(x.size());

    std::vector<double> y = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.uniform() > p_m) continue;
        double yl = lower[i], yu = upper[i];
        double span = yu - yl;
        if (span <= 0.0) continue;
        double d1 = (y[i] - yl) / span;
        double d2 = (yu - y[i]) / span;
        double u = rng.uniform();
        double mut_pow = 1.0 / (eta_m + 1.0);
        double deltaq;
        if (u <= 0.5) {
            double xy = 1.0 - d1;
            double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            double xy = 1.0 - d2;
            double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        y[i] = clampv(y[i] + deltaq * span, yl, yu);
    }
    return y;
}

namespace {

// a dominates b under minimization
bool pareto_dominates(const std::vector<double>& a, const std::vector<double>& b) {
    bool better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) better = true;
    }
    return better;
}

}  // namespace

std::vector<std::vector<int>> fast_nondominated_sort(const std::vector<std::vector<double>>& objs) {
    const int n = static_cast<int>(objs.size());
    std::vector<std::vector<int>> dominated(n);
    std::vector<int> dom_count(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pareto_dominates(objs[i], objs[j])) {
                dominated[i].push_back(j);
                ++dom_count[j];
            } else if (pareto_dominates(objs[j], objs[i])) {
                dominated[j].push_back(i);
                ++dom_count[i];
            }
        }
    }
    std::vector<std::vector<int>> fronts;
    std::vector<int> current;
    for (int i = 0; i < n; ++i)
        if (dom_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<int> next;
        for (int i : current)
            for (int j : dominated[i])
                if (--dom_count[j] == 0) next.push_back(j);
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& objs,
                                      const std::vector<int>& front) {
    const std::size_t sz = front.size();
    std::vector<double> dist(sz, 0.0);
    if (sz == 0) return dist;
    const std::size_t m = objs[front[0]].size();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> order(sz);
    for (std::size_t obj = 0; obj < m; ++obj) {
        for (std::size_t i = 0; i < sz; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objs[front[a]][obj] < objs[front[b]][obj];
        });
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        double range = objs[front[order.back()]][obj] - objs[front[order.front()]][obj];
        if (range <= 0.0) continue;
        for (std::size_t i = 1; i + 1 < sz; ++i) {
            if (dist[order[i]] == inf) continue;
            dist[order[i]] += (objs[front[order[i + 1]]][obj] - objs[front[order[i - 1]]][obj]) / range;
        }
    }
    return dist;
}

}  // namespace qdom
