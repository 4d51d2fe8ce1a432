#ifndef QDOM_OPTIMIZER_HPP
#define QDOM_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdom/co_map.hpp"
#include "qdom/hypervolume.hpp"
#include "qdom/nsga2.hpp"
#include "qdom/zdt.hpp"

namespace qdom {

enum class SelectionMode { QDom, Mean, Single };

SelectionMode parse_mode(const std::string& name);
std::string mode_name(SelectionMode mode);

// A stochastic bi-objective problem: box bounds, input-noise level, and an
// evaluation drawing one objective sample per call.
struct NoisyProblem {
    std::string name;
    std::vector<double> lower, upper;
    double sigma = 0.0;
    std::function<ObjPair(const std::vector<double>&, Rng&)> evaluate;
    std::optional<ZdtSpec> zdt;  // enables analytic-front gap reporting

    int dimension() const { return static_cast<int>(lower.size()); }
};

NoisyProblem make_noisy_zdt(const ZdtSpec& spec, double sigma);

struct Individual {
    std::vector<double> x;
    std::vector<ObjPair> samples;
    ObjPair mean{0.0, 0.0};

    // selection bookkeeping, filled by the survival operators
    int front = 0;
    double sel_score = 0.0;  // lower is better in every mode
    std::shared_ptr<const EmpiricalCOMap> comap;  // cached against the run's grid

    void update_mean();
};

struct OptimizerConfig {
    int popsize = 20;
    int generations = 200;
    int samples_per_eval = 64;  // n; Single mode always spends 1 per candidate
    int nR = 8, nS = 8;
    SelectionMode mode = SelectionMode::QDom;
    VariationParams variation;
    std::uint64_t seed = 0;
    HVConfig hv;
    // Fresh objective draws per individual used only for the reported gap.
    // Kept separate from the selection samples (and outside the evaluation
    // budget) so single-sample selection cannot flatter itself with the lucky
    // draws it survived on.
    int measure_replicates = 16;

    void validate() const;
    int effective_samples() const {
        return mode == SelectionMode::Single ? 1 : samples_per_eval;
    }
};

struct HistoryRow {
    int generation = 0;
    long long evaluations = 0;
    double delta_hv = 0.0;
};

struct RunHistory {
    std::vector<HistoryRow> rows;
    std::vector<Individual> final_population;
};

// One batch of objective samples for a candidate; n rows, deterministic in
// the stream state.
std::vector<ObjPair> evaluate_batch(const NoisyProblem& problem, const std::vector<double>& x,
                                    int n, Rng& rng);

// q-dominance survival: map every pool member onto the shared grid, sort the
// fronts by Algorithm-style sweeps, fill front by front and cut the last
// admitted front by its within-front score.
std::vector<Individual> survival_qdom(std::vector<Individual> pool, int popsize,
                                      std::shared_ptr<const AugmentedGrid> grid);

// Classic NSGA-II survival on the given per-individual objective vectors
// (means or single samples): non-dominated sort plus crowding distance.
std::vector<Individual> survival_mean(std::vector<Individual> pool, int popsize);
std::vector<Individual> survival_single(std::vector<Individual> pool, int popsize);

RunHistory run(const NoisyProblem& problem, const OptimizerConfig& config);

}  // namespace qdom

#endif
