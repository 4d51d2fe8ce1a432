#include "qdom/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qdom/dominance.hpp"

namespace qdom {

namespace {
// substream tags
constexpr std::uint64_t kInit = 0x696e6974;
constexpr std::uint64_t kEval = 0x6576616c;
constexpr std::uint64_t kVary = 0x76617279;
constexpr std::uint64_t kTour = 0x746f7572;
constexpr std::uint64_t kMeas = 0x6d656173;
}  // namespace

SelectionMode parse_mode(const std::string& name) {
    if (name == "qdom") return SelectionMode::QDom;
    if (name == "mean") return SelectionMode::Mean;
    if (name == "single") return SelectionMode::Single;
    throw std::invalid_argument("unknown selection mode: " + name);
}

std::string mode_name(SelectionMode mode) {
    switch (mode) {
        case SelectionMode::QDom: return "qdom";
        case SelectionMode::Mean: return "mean";
        case SelectionMode::Single: return "single";
    }
    return "?";
}

NoisyProblem make_noisy_zdt(const ZdtSpec& spec, double sigma) {
    spec.validate();
    if (sigma < 0.0) throw std::invalid_argument("make_noisy_zdt: sigma must be >= 0");
    NoisyProblem p;
    p.name = "zdt" + std::to_string(spec.variant);
    p.sigma = sigma;
    p.zdt = spec;
    p.lower.resize(spec.N);
    p.upper.resize(spec.N);
    for (int i = 0; i < spec.N; ++i) {
        p.lower[i] = spec.lower(i);
        p.upper[i] = spec.upper(i);
    }
    p.evaluate = [spec, sigma](const std::vector<double>& x, Rng& rng) {
        return sigma > 0.0 ? noisy_eval(spec, x, sigma, rng) : zdt_eval(spec, x);
    };
    return p;
}

void Individual::update_mean() {
    mean = {0.0, 0.0};
    for (const auto& s : samples) {
        mean[0] += s[0];
        mean[1] += s[1];
    }
    if (!samples.empty()) {
        mean[0] /= static_cast<double>(samples.size());
        mean[1] /= static_cast<double>(samples.size());
    }
}

void OptimizerConfig::validate() const {
    if (popsize < 2 || popsize % 2 != 0)
        throw std::invalid_argument("OptimizerConfig: popsize must be even and >= 2");
    if (generations < 0) throw std::invalid_argument("OptimizerConfig: generations must be >= 0");
    if (samples_per_eval < 1)
        throw std::invalid_argument("OptimizerConfig: samples_per_eval must be >= 1");
    if (mode == SelectionMode::QDom && samples_per_eval != nR * nS)
        throw std::invalid_argument("OptimizerConfig: qdom mode requires n = nR*nS");
}

std::vector<ObjPair> evaluate_batch(const NoisyProblem& problem, const std::vector<double>& x,
                                    int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("evaluate_batch: n must be >= 1");
    std::vector<ObjPair> samples;
    samples.reserve(n);
    for (int i = 0; i < n; ++i) samples.push_back(problem.evaluate(x, rng));
    return samples;
}

namespace {

std::shared_ptr<const EmpiricalCOMap> map_for(Individual& ind,
                                              const std::shared_ptr<const AugmentedGrid>& grid) {
    if (ind.comap && ind.comap->grid_ptr() == grid) return ind.comap;
    SampleSet set;
    set.orientation = Orientation::Minimize;
    set.points.reserve(ind.samples.size());
    for (const auto& s : ind.samples) set.points.push_back({s[0], s[1]});
    ind.comap = std::make_shared<const EmpiricalCOMap>(co_map(set, grid));
    return ind.comap;
}

std::vector<Individual> take_by_fronts(std::vector<Individual>& pool,
                                       const std::vector<std::vector<int>>& fronts,
                                       const std::vector<std::vector<double>>& scores,
                                       int popsize) {
    std::vector<Individual> next;
    next.reserve(popsize);
    for (std::size_t f = 0; f < fronts.size() && static_cast<int>(next.size()) < popsize; ++f) {
        for (std::size_t p = 0; p < fronts[f].size() && static_cast<int>(next.size()) < popsize;
             ++p) {
            Individual ind = std::move(pool[fronts[f][p]]);
            ind.front = static_cast<int>(f);
            ind.sel_score = scores[f][p];
            next.push_back(std::move(ind));
        }
    }
    return next;
}

}  // namespace

std::vector<Individual> survival_qdom(std::vector<Individual> pool, int popsize,
                                      std::shared_ptr<const AugmentedGrid> grid) {
    const std::size_t block = grid->spec.n;
    std::vector<EmpiricalCOMap> maps;
    maps.reserve(pool.size());
    for (auto& ind : pool) {
        if (ind.samples.size() != block)
            throw std::invalid_argument("survival_qdom: sample block does not match the grid");
        maps.push_back(*map_for(ind, grid));
    }
    auto ordering = q_sort(dominance_tensor(maps), /*ties=*/false);
    return take_by_fronts(pool, ordering.fronts, ordering.scores, popsize);
}

namespace {

std::vector<Individual> survival_crowding(std::vector<Individual> pool, int popsize) {
    std::vector<std::vector<double>> objs;
    objs.reserve(pool.size());
    for (auto& ind : pool) {
        ind.update_mean();
        objs.push_back({ind.mean[0], ind.mean[1]});
    }
    auto fronts = fast_nondominated_sort(objs);
    std::vector<std::vector<double>> scores(fronts.size());
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        auto crowd = crowding_distance(objs, fronts[f]);
        // order by descending crowding, index as tie-break
        std::vector<std::size_t> order(fronts[f].size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (crowd[a] != crowd[b]) return crowd[a] > crowd[b];
            return fronts[f][a] < fronts[f][b];
        });
        std::vector<int> sorted_front;
        for (std::size_t idx : order) {
            sorted_front.push_back(fronts[f][idx]);
            // lower-is-better score for the tournament
            scores[f].push_back(-crowd[idx]);
        }
        fronts[f] = std::move(sorted_front);
    }
    return take_by_fronts(pool, fronts, scores, popsize);
}

}  // namespace

std::vector<Individual> survival_mean(std::vector<Individual> pool, int popsize) {
    return survival_crowding(std::move(pool), popsize);
}

std::vector<Individual> survival_single(std::vector<Individual> pool, int popsize) {
    for (const auto& ind : pool)
        if (ind.samples.size() != 1)
            throw std::invalid_argument("survival_single: expected one sample per individual");
    return survival_crowding(std::move(pool), popsize);
}

namespace {

int tournament_pick(const std::vector<Individual>& pop, Rng& rng) {
    int a = static_cast<int>(rng.next_u64() % pop.size());
    int b = static_cast<int>(rng.next_u64() % pop.size());
    if (pop[a].front != pop[b].front) return pop[a].front < pop[b].front ? a : b;
    if (pop[a].sel_score != pop[b].sel_score) return pop[a].sel_score < pop[b].sel_score ? a : b;
    return std::min(a, b);
}

double history_gap(const NoisyProblem& problem, const OptimizerConfig& config,
                   const std::vector<Individual>& pop, int gen) {
    if (!problem.zdt) return std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<ObjPair>> blocks;
    blocks.reserve(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) {
        Rng meas = Rng::substream(config.seed, kMeas, static_cast<std::uint64_t>(gen), i);
        blocks.push_back(evaluate_batch(problem, pop[i].x, config.measure_replicates, meas));
    }
    return delta_hv(blocks, *problem.zdt, config.hv);
}

}  // namespace

RunHistory run(const NoisyProblem& problem, const OptimizerConfig& config) {
    config.validate();
    const int n_eff = config.effective_samples();
    const int pop_n = config.popsize;
    const int dim = problem.dimension();

    std::shared_ptr<const AugmentedGrid> grid;
    if (config.mode == SelectionMode::QDom) {
        GridSpec gs;
        gs.n = config.nR * config.nS;
        gs.d = 2;
        gs.nR = config.nR;
        gs.nS = config.nS;
        gs.n0 = 0;
        gs.seed = config.seed;
        grid = std::make_shared<const AugmentedGrid>(build_grid(gs));
    }

    auto survive = [&](std::vector<Individual> pool) {
        switch (config.mode) {
            case SelectionMode::QDom: return survival_qdom(std::move(pool), pop_n, grid);
            case SelectionMode::Mean: return survival_mean(std::move(pool), pop_n);
            case SelectionMode::Single: return survival_single(std::move(pool), pop_n);
        }
        throw std::logic_error("run: unreachable");
    };

    RunHistory history;
    long long evaluations = 0;

    // initial population
    std::vector<Individual> pop(pop_n);
    for (int i = 0; i < pop_n; ++i) {
        Rng init = Rng::substream(config.seed, kInit, 0, i);
        pop[i].x.resize(dim);
        for (int c = 0; c < dim; ++c)
            pop[i].x[c] = init.uniform(problem.lower[c], problem.upper[c]);
        Rng eval = Rng::substream(config.seed, kEval, 0, i);
        pop[i].samples = evaluate_batch(problem, pop[i].x, n_eff, eval);
        pop[i].update_mean();
        evaluations += n_eff;
    }
    // annotate fronts/scores for the first tournament
    pop = survive(std::move(pop));
    history.rows.push_back({0, evaluations, history_gap(problem, config, pop, 0)});

    for (int gen = 1; gen <= config.generations; ++gen) {
        Rng tour = Rng::substream(config.seed, kTour, gen, 0);
        std::vector<Individual> offspring;
        offspring.reserve(pop_n);
        for (int pair = 0; pair < pop_n / 2; ++pair) {
            int pa = tournament_pick(pop, tour);
            int pb = tournament_pick(pop, tour);
            Rng vary = Rng::substream(config.seed, kVary, gen, pair);
            auto [c1, c2] =
                sbx_crossover(pop[pa].x, pop[pb].x, problem.lower, problem.upper,
                              config.variation.eta_c, config.variation.p_c, vary);
            c1 = polynomial_mutation(c1, problem.lower, problem.upper, config.variation.eta_m,
                                     config.variation.p_m, vary);
            c2 = polynomial_mutation(c2, problem.lower, problem.upper, config.variation.eta_m,
                                     config.variation.p_m, vary);
            std::array<std::vector<double>, 2> children{std::move(c1), std::move(c2)};
            for (auto& child : children) {
                Individual ind;
                ind.x = std::move(child);
                Rng eval = Rng::substream(config.seed, kEval, gen,
                                          static_cast<std::uint64_t>(offspring.size()));
                ind.samples = evaluate_batch(problem, ind.x, n_eff, eval);
                ind.update_mean();
                evaluations += n_eff;
                offspring.push_back(std::move(ind));
            }
        }

        std::vector<Individual> pool = std::move(pop);
        for (auto& ind : offspring) pool.push_back(std::move(ind));
        pop = survive(std::move(pool));
        history.rows.push_back({gen, evaluations, history_gap(problem, config, pop, gen)});
    }

    history.final_population = std::move(pop);
    return history;
}

}  // namespace qdom
