#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdom/grid.hpp"
#include "qdom/io.hpp"
#include "qdom/optimizer.hpp"
#include "qdom/ranking.hpp"
#include "qdom/threshold.hpp"

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    return out;
}

struct GridArgs {
    int n = 0, d = 2, nr = 0, ns = 0;
    double theta = 0.0;
    std::uint64_t seed = 0;
    std::string out = "grid.csv";
    std::string samples;
    std::string map_out = "map.csv";
    std::string orientation = "maximize";
};

int cmd_grid(const GridArgs& a) {
    qdom::GridSpec spec;
    if (a.nr > 0 && a.ns > 0) {
        spec.n = a.n > 0 ? a.n : a.nr * a.ns;
        spec.nR = a.nr;
        spec.nS = a.ns;
        spec.n0 = spec.n - a.nr * a.ns;
        spec.d = a.d;
        spec.theta = a.theta > 0.0 ? a.theta : qdom::default_theta(a.d);
        spec.seed = a.seed;
    } else {
        if (a.n <= 0) throw std::invalid_argument("grid: provide --n or both --nr and --ns");
        double theta = a.theta > 0.0 ? a.theta : qdom::default_theta(a.d);
        auto f = qdom::factorize(a.n, a.d, theta);
        spec = {a.n, a.d, f.nR, f.nS, f.n0, theta, a.seed};
    }
    auto grid = std::make_shared<const qdom::AugmentedGrid>(qdom::build_grid(spec));
    {
        auto out = open_out(a.out);
        qdom::write_grid_csv(*grid, out);
    }
    std::cout << "grid: n=" << spec.n << " d=" << spec.d << " nR=" << spec.nR
              << " nS=" << spec.nS << " n0=" << spec.n0 << " -> " << a.out << "\n";

    if (!a.samples.empty()) {
        qdom::SampleSet set = qdom::read_samples(a.samples);
        set.orientation = qdom::parse_orientation(a.orientation);
        auto map = qdom::co_map(set, grid);
        auto out = open_out(a.map_out);
        qdom::write_map_csv(map, out);
        std::cout << "map: " << set.points.size() << " samples -> " << a.map_out << "\n";
    }
    return 0;
}

struct RankArgs {
    std::vector<std::string> files;
    int k = 0, reps = 1;
    std::string policy = "theorem-theta";
    double theta = 0.0;
    bool ties = false;
    std::string orientation;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_rank(const RankArgs& a) {
    if (a.files.size() < 2) throw std::invalid_argument("rank: need at least two sample files");
    qdom::RankRequest req;
    for (const auto& f : a.files) {
        auto set = qdom::read_samples(f);
        if (!a.orientation.empty()) set.orientation = qdom::parse_orientation(a.orientation);
        req.candidates.push_back(std::move(set));
    }
    req.subsample = a.k;
    req.repetitions = a.reps;
    req.policy = qdom::parse_policy(a.policy);
    req.theta = a.theta;
    req.ties = a.ties;
    req.seed = a.seed;

    auto report = qdom::rank_samples(req);
    std::string text = qdom::rank_report_json(report);
    if (a.out.empty()) {
        std::cout << text << "\n";
    } else {
        auto out = open_out(a.out);
        out << text << "\n";
    }
    return 0;
}

struct ThresholdArgs {
    qdom::ThresholdInputs in;
};

int cmd_threshold(ThresholdArgs& a) {
    if (a.in.theta == 0.0) a.in.theta = qdom::default_theta(a.in.d);
    auto res = qdom::sample_threshold(a.in);
    std::cout << "branch: " << res.branch << "\n"
              << "n1: " << qdom::format_double(res.n1) << "\n"
              << "n2: " << qdom::format_double(res.n2) << "\n"
              << "n*: "
              << (res.overflow ? std::string("overflow (+inf)") : qdom::format_double(res.n_star))
              << "\n";
    return 0;
}

struct OptimizeArgs {
    std::string config;
    std::string out_dir = ".";
    std::string mode;  // override
    double sigma = -1.0;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

int cmd_optimize(const OptimizeArgs& a) {
    std::ifstream in(a.config);
    if (!in) throw std::invalid_argument("cannot open " + a.config);
    json cfg;
    in >> cfg;

    qdom::ZdtSpec spec;
    std::string problem = cfg.value("problem", "zdt1");
    if (problem.rfind("zdt", 0) != 0)
        throw std::invalid_argument("optimize: only zdt problems are built in");
    spec.variant = std::stoi(problem.substr(3));
    spec.N = cfg.value("N", 30);

    double sigma = a.sigma >= 0.0 ? a.sigma : cfg.value("sigma", 0.1);
    auto noisy = qdom::make_noisy_zdt(spec, sigma);

    qdom::OptimizerConfig oc;
    oc.popsize = cfg.value("popsize", 20);
    oc.generations = cfg.value("generations", 200);
    oc.samples_per_eval = cfg.value("n", 64);
    oc.nR = cfg.value("nR", 8);
    oc.nS = cfg.value("nS", 8);
    oc.mode = qdom::parse_mode(!a.mode.empty() ? a.mode : cfg.value("mode", "qdom"));
    if (cfg.contains("ref_point")) {
        auto rp = cfg.at("ref_point");
        oc.hv.ref = {rp.at(0).get<double>(), rp.at(1).get<double>()};
    }
    std::uint64_t base_seed = a.seed_set ? a.seed : cfg.value("seed", std::uint64_t{0});
    int replications = cfg.value("replications", 1);

    // equal evaluation budgets: the single-sample mode runs n-times as many
    // generations
    if (oc.mode == qdom::SelectionMode::Single)
        oc.generations *= cfg.value("n", 64);

    std::vector<qdom::RunHistory> histories;
    histories.reserve(replications);
    for (int r = 0; r < replications; ++r) {
        oc.seed = base_seed + static_cast<std::uint64_t>(r);
        histories.push_back(qdom::run(noisy, oc));
    }

    std::filesystem::create_directories(a.out_dir);
    std::string path = a.out_dir + "/" + problem + "_" + qdom::mode_name(oc.mode) + "_history.csv";
    auto out = open_out(path);
    qdom::write_history_csv(histories, out);
    std::cout << "wrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Center-outward q-dominance toolkit"};
    app.require_subcommand(1);

    GridArgs ga;
    auto* grid = app.add_subcommand("grid", "Build an augmented grid; optionally map a sample file");
    grid->add_option("--n", ga.n, "sample count to factorize");
    grid->add_option("--d", ga.d, "dimension");
    grid->add_option("--nr", ga.nr, "radial shells (overrides factorization)");
    grid->add_option("--ns", ga.ns, "directions per shell");
    grid->add_option("--theta", ga.theta, "radial exponent");
    grid->add_option("--seed", ga.seed, "direction seed");
    grid->add_option("--out", ga.out, "grid CSV path");
    grid->add_option("--samples", ga.samples, "sample file to map onto the grid");
    grid->add_option("--map-out", ga.map_out, "map CSV path");
    grid->add_option("--orientation", ga.orientation, "maximize|minimize");

    RankArgs ra;
    auto* rank = app.add_subcommand("rank", "Rank sample files by q-dominance sorting");
    rank->add_option("files", ra.files, "candidate sample files (CSV or JSON)");
    rank->add_option("--k", ra.k, "subsample size per repetition");
    rank->add_option("--reps", ra.reps, "repetitions");
    rank->add_option("--policy", ra.policy, "grid policy: theorem-theta|root-d");
    rank->add_option("--theta", ra.theta, "radial exponent");
    rank->add_flag("--ties", ra.ties, "report equal within-front scores as ties");
    rank->add_option("--orientation", ra.orientation, "override orientation for all files");
    rank->add_option("--seed", ra.seed, "subsampling seed");
    rank->add_option("--out", ra.out, "write the JSON report here instead of stdout");

    ThresholdArgs ta;
    auto* thr = app.add_subcommand("threshold", "Sample-size threshold n*(delta)");
    thr->add_option("--d", ta.in.d, "objective dimension")->required();
    thr->add_option("--delta", ta.in.delta, "Type-I error in (0,1)")->required();
    thr->add_option("--margin", ta.in.Delta, "separation margin Delta")->required();
    thr->add_option("--L", ta.in.L, "bi-Lipschitz constant")->required();
    thr->add_option("--lbar", ta.in.Lbar, "interpolation Lipschitz constant")->required();
    thr->add_option("--C", ta.in.C, "moment constant")->required();
    thr->add_option("--cd", ta.in.c_d, "covering constant")->required();
    thr->add_option("--theta", ta.in.theta, "radial exponent (default: interval midpoint)");

    OptimizeArgs oa;
    auto* opt = app.add_subcommand("optimize", "Run the stochastic NSGA-II experiment");
    opt->add_option("--config", oa.config, "experiment config JSON")->required();
    opt->add_option("--out-dir", oa.out_dir, "output directory");
    opt->add_option("--mode", oa.mode, "override selection mode: qdom|mean|single");
    opt->add_option("--sigma", oa.sigma, "override noise level");
    opt->add_option("--seed", oa.seed, "override base seed")->each([&](const std::string&) {
        oa.seed_set = true;
    });

    try {
        app.parse(argc, argv);
        if (*grid) return cmd_grid(ga);
        if (*rank) return cmd_rank(ra);
        if (*thr) return cmd_threshold(ta);
        if (*opt) return cmd_optimize(oa);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
