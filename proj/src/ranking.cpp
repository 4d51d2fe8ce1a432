#include "qdom/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "qdom/io.hpp"
#include "qdom/rng.hpp"

namespace qdom {

GridPolicy parse_policy(const std::string& name) {
    if (name == "theorem-theta") return GridPolicy::TheoremTheta;
    if (name == "root-d") return GridPolicy::RootD;
    throw std::invalid_argument("unknown grid policy: " + name);
}

GridSpec rank_grid_spec(int n, int d, GridPolicy policy, double theta, std::uint64_t seed) {
    if (theta == 0.0) theta = default_theta(d);
    Factorization f{};
    if (policy == GridPolicy::TheoremTheta) {
        f = factorize(n, d, theta);
    } else {
        // nR near n^(1/d); same n0-minimizing adjustment as factorize, driven
        // by an effective exponent
        double eff = std::log(std::max(2.0, std::pow(double(n), 1.0 / d))) / std::log(double(n));
        auto [lo, hi] = theta_interval(d);
        eff = std::clamp(eff, std::nextafter(lo, 1.0), std::nextafter(hi, 0.0));
        f = factorize(n, d, eff);
    }
    GridSpec spec;
    spec.n = n;
    spec.d = d;
    spec.nR = f.nR;
    spec.nS = f.nS;
    spec.n0 = f.n0;
    spec.theta = theta;
    spec.seed = seed;
    return spec;
}

namespace {

std::vector<Vec> subsample_points(const std::vector<Vec>& points, int k, Rng& rng) {
    std::vector<int> idx(points.size());
    std::iota(idx.begin(), idx.end(), 0);
    // partial Fisher-Yates, deterministic in the stream
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.next_u64() % (idx.size() - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<Vec> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.push_back(points[idx[i]]);
    return out;
}

}  // namespace

RankReport rank_samples(const RankRequest& req) {
    const int m = static_cast<int>(req.candidates.size());
    if (m < 1) throw std::invalid_argument("rank_samples: need at least one candidate");
    const int d = req.candidates.front().dimension();
    for (const auto& c : req.candidates) {
        c.validate();
        if (c.dimension() != d)
            throw std::invalid_argument("rank_samples: candidates differ in dimension");
    }

    int n = req.subsample > 0 ? req.subsample : static_cast<int>(req.candidates.front().points.size());
    for (const auto& c : req.candidates) {
        if (req.subsample > 0) {
            if (static_cast<int>(c.points.size()) < n)
                throw std::invalid_argument("rank_samples: candidate '" + c.label +
                                            "' has fewer points than the subsample size");
        } else if (static_cast<int>(c.points.size()) != n) {
            throw std::invalid_argument("rank_samples: candidates must have equal sample counts");
        }
    }
    if (n < 4) throw std::invalid_argument("rank_samples: too few samples for a grid");
    if (req.repetitions < 1) throw std::invalid_argument("rank_samples: repetitions must be >= 1");

    RankReport report;
    report.grid = rank_grid_spec(n, d, req.policy, req.theta, req.seed);
    auto grid = std::make_shared<const AugmentedGrid>(build_grid(report.grid));

    for (const auto& c : req.candidates) report.labels.push_back(c.label);
    std::vector<double> sum(m, 0.0), sumsq(m, 0.0);

    for (int rep = 0; rep < req.repetitions; ++rep) {
        std::vector<EmpiricalCOMap> maps;
        maps.reserve(m);
        for (int c = 0; c < m; ++c) {
            SampleSet working = req.candidates[c];
            if (req.subsample > 0) {
                Rng rng = Rng::substream(req.seed, 0x737562ULL, rep, c);
                working.points = subsample_points(working.points, n, rng);
            }
            maps.push_back(co_map(working, grid));
        }
        auto ordering = q_sort(dominance_tensor(maps), req.ties);
        for (std::size_t f = 0; f < ordering.fronts.size(); ++f) {
            for (int j : ordering.fronts[f]) {
                double r = static_cast<double>(f) + 1.0;
                sum[j] += r;
                sumsq[j] += r * r;
            }
        }
        if (rep == req.repetitions - 1) {
            report.last_fronts = ordering;
            report.last_scores.assign(m, 0.0);
            for (std::size_t f = 0; f < ordering.fronts.size(); ++f)
                for (std::size_t p = 0; p < ordering.fronts[f].size(); ++p)
                    report.last_scores[ordering.fronts[f][p]] = ordering.scores[f][p];
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j)
                        report.max_dominated[report.labels[i] + "|" + report.labels[j]] =
                            max_dominated_quantile(maps[i], maps[j]);
        }
    }

    report.mean_rank.resize(m);
    report.stddev_rank.resize(m);
    for (int c = 0; c < m; ++c) {
        double mean = sum[c] / req.repetitions;
        report.mean_rank[c] = mean;
        double var = sumsq[c] / req.repetitions - mean * mean;
        report.stddev_rank[c] = std::sqrt(std::max(0.0, var));
    }
    return report;
}

std::string rank_report_json(const RankReport& report) {
    nlohmann::json j;
    j["grid"] = {{"n", report.grid.n},   {"d", report.grid.d},   {"nR", report.grid.nR},
                 {"nS", report.grid.nS}, {"n0", report.grid.n0}, {"theta", report.grid.theta},
                 {"seed", report.grid.seed}};
    nlohmann::json fronts = nlohmann::json::array();
    for (const auto& front : report.last_fronts.fronts) {
        nlohmann::json labels = nlohmann::json::array();
        for (int c : front) labels.push_back(report.labels[c]);
        fronts.push_back(labels);
    }
    j["fronts"] = fronts;
    nlohmann::json scores;
    for (std::size_t c = 0; c < report.labels.size(); ++c)
        scores[report.labels[c]] = report.last_scores[c];
    j["scores"] = scores;
    nlohmann::json mdq;
    for (const auto& [pair, k] : report.max_dominated) mdq[pair] = k;
    j["max_dominated_quantile"] = mdq;
    nlohmann::json ranks;
    for (std::size_t c = 0; c < report.labels.size(); ++c)
        ranks[report.labels[c]] = {{"mean", report.mean_rank[c]},
                                   {"stddev", report.stddev_rank[c]}};
    j["ranks"] = ranks;
    return j.dump(2);
}

}  // namespace qdom
