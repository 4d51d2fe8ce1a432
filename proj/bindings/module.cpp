#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "qdom/dominance.hpp"
#include "qdom/hypervolume.hpp"
#include "qdom/optimizer.hpp"
#include "qdom/ranking.hpp"
#include "qdom/stats.hpp"
#include "qdom/threshold.hpp"

namespace py = pybind11;
using namespace qdom;

namespace {

std::vector<Vec> to_points(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
    if (a.ndim() != 2) throw std::invalid_argument("expected a 2-d array of shape (n, d)");
    std::vector<Vec> pts(a.shape(0), Vec(a.shape(1)));
    auto r = a.unchecked<2>();
    for (py::ssize_t i = 0; i < a.shape(0); ++i)
        for (py::ssize_t j = 0; j < a.shape(1); ++j) pts[i][j] = r(i, j);
    return pts;
}

py::array_t<double> from_points(const std::vector<Vec>& pts) {
    py::ssize_t n = static_cast<py::ssize_t>(pts.size());
    py::ssize_t d = n ? static_cast<py::ssize_t>(pts.front().size()) : 0;
    py::array_t<double> out({n, d});
    auto w = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i)
        for (py::ssize_t j = 0; j < d; ++j) w(i, j) = pts[i][j];
    return out;
}

SampleSet make_set(const py::array_t<double>& points, const std::string& orientation,
                   const std::string& label) {
    SampleSet set;
    set.label = label;
    set.orientation =
        orientation == "minimize" ? Orientation::Minimize : Orientation::Maximize;
    set.points = to_points(points);
    return set;
}

}  // namespace

PYBIND11_MODULE(_qdom, m) {
    m.doc() = "Center-outward q-dominance for comparing multivariate sample distributions";

    py::class_<GridSpec>(m, "GridSpec")
        .def_readonly("n", &GridSpec::n)
        .def_readonly("d", &GridSpec::d)
        .def_readonly("nR", &GridSpec::nR)
        .def_readonly("nS", &GridSpec::nS)
        .def_readonly("n0", &GridSpec::n0)
        .def_readonly("theta", &GridSpec::theta)
        .def_readonly("seed", &GridSpec::seed);

    py::class_<AugmentedGrid, std::shared_ptr<AugmentedGrid>>(m, "AugmentedGrid")
        .def_property_readonly("spec", [](const AugmentedGrid& g) { return g.spec; })
        .def_property_readonly("points", [](const AugmentedGrid& g) { return from_points(g.points); })
        .def_property_readonly("directions",
                               [](const AugmentedGrid& g) { return from_points(g.directions); });

    py::class_<EmpiricalCOMap, std::shared_ptr<EmpiricalCOMap>>(m, "EmpiricalCOMap")
        .def_property_readonly("ranks", [](const EmpiricalCOMap& m_) { return m_.ranks(); })
        .def_property_readonly("assignment",
                               [](const EmpiricalCOMap& m_) {
                                   std::vector<int> a(m_.size());
                                   for (int i = 0; i < m_.size(); ++i) a[i] = m_.grid_index_of(i);
                                   return a;
                               })
        .def("sign", [](const EmpiricalCOMap& m_, int i) { return m_.sign(i); })
        .def("quantile", [](const EmpiricalCOMap& m_, int k, int s) { return m_.quantile(k, s); });

    m.def(
        "factorize",
        [](int n, int d, std::optional<double> theta) {
            auto f = theta ? factorize(n, d, *theta) : factorize(n, d);
            return py::make_tuple(f.nR, f.nS, f.n0);
        },
        py::arg("n"), py::arg("d"), py::arg("theta") = py::none());

    m.def("default_theta", &default_theta, py::arg("d"));

    m.def(
        "make_grid",
        [](int n, int d, std::optional<double> theta, std::uint64_t seed) {
            double t = theta ? *theta : default_theta(d);
            return std::make_shared<AugmentedGrid>(make_grid(n, d, t, seed));
        },
        py::arg("n"), py::arg("d"), py::arg("theta") = py::none(), py::arg("seed") = 0);

    m.def(
        "co_map",
        [](const py::array_t<double>& points, std::shared_ptr<AugmentedGrid> grid,
           const std::string& orientation) {
            return std::make_shared<EmpiricalCOMap>(
                co_map(make_set(points, orientation, "samples"), std::move(grid)));
        },
        py::arg("points"), py::arg("grid"), py::arg("orientation") = "maximize");

    m.def(
        "dominates_at",
        [](const EmpiricalCOMap& x, const EmpiricalCOMap& y, double q) {
            return dominates_at(x, y, q);
        },
        py::arg("map_x"), py::arg("map_y"), py::arg("q"));

    m.def(
        "max_dominated_quantile",
        [](const EmpiricalCOMap& x, const EmpiricalCOMap& y) {
            return max_dominated_quantile(x, y);
        },
        py::arg("map_x"), py::arg("map_y"));

    m.def(
        "q_sort",
        [](const std::vector<std::shared_ptr<EmpiricalCOMap>>& maps, bool ties) {
            std::vector<EmpiricalCOMap> owned;
            owned.reserve(maps.size());
            for (const auto& p : maps) owned.push_back(*p);
            auto ordering = q_sort(dominance_tensor(owned), ties);
            return py::make_tuple(ordering.fronts, ordering.scores);
        },
        py::arg("maps"), py::arg("ties") = false);

    m.def(
        "rank_samples",
        [](const std::vector<py::array_t<double>>& candidates,
           const std::vector<std::string>& labels, const std::string& orientation, int subsample,
           int repetitions, const std::string& policy, double theta, bool ties,
           std::uint64_t seed) {
            RankRequest req;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                req.candidates.push_back(make_set(
                    candidates[i], orientation,
                    i < labels.size() ? labels[i] : "candidate" + std::to_string(i)));
            req.subsample = subsample;
            req.repetitions = repetitions;
            req.policy = parse_policy(policy);
            req.theta = theta;
            req.ties = ties;
            req.seed = seed;
            auto report = rank_samples(req);
            py::dict out;
            out["labels"] = report.labels;
            out["mean_rank"] = report.mean_rank;
            out["stddev_rank"] = report.stddev_rank;
            out["fronts"] = report.last_fronts.fronts;
            return out;
        },
        py::arg("candidates"), py::arg("labels") = std::vector<std::string>{},
        py::arg("orientation") = "maximize", py::arg("subsample") = 0,
        py::arg("repetitions") = 1, py::arg("policy") = "theorem-theta", py::arg("theta") = 0.0,
        py::arg("ties") = false, py::arg("seed") = 0);

    m.def(
        "sample_threshold",
        [](int d, double delta, double Delta, double L, double Lbar, double C, double c_d,
           double theta) {
            ThresholdInputs in{d, delta, Delta, L, Lbar, C, c_d,
                               theta > 0.0 ? theta : default_theta(d)};
            auto res = sample_threshold(in);
            py::dict out;
            out["n1"] = res.n1;
            out["n2"] = res.n2;
            out["n_star"] = res.n_star;
            out["overflow"] = res.overflow;
            out["branch"] = res.branch;
            return out;
        },
        py::arg("d"), py::arg("delta"), py::arg("Delta"), py::arg("L"), py::arg("Lbar"),
        py::arg("C"), py::arg("c_d"), py::arg("theta") = 0.0);

    m.def("lambert_wm1", &lambert_wm1, py::arg("x"));

    m.def(
        "zdt_eval",
        [](int variant, const std::vector<double>& z, int N) {
            ZdtSpec spec{variant, N > 0 ? N : static_cast<int>(z.size())};
            auto f = zdt_eval(spec, z);
            return py::make_tuple(f[0], f[1]);
        },
        py::arg("variant"), py::arg("z"), py::arg("N") = 0);

    m.def(
        "hypervolume_2d",
        [](const std::vector<std::pair<double, double>>& pts, std::pair<double, double> ref) {
            std::vector<ObjPair> p;
            p.reserve(pts.size());
            for (auto [a, b] : pts) p.push_back({a, b});
            return hypervolume_2d(p, {ref.first, ref.second});
        },
        py::arg("points"), py::arg("ref") = std::make_pair(11.0, 11.0));

    m.def(
        "truncnorm",
        [](double mean, double sigma, double a, double b, int n, std::uint64_t seed) {
            Rng rng(seed);
            std::vector<double> out(n);
            for (auto& v : out) v = truncnorm_sample(mean, sigma, a, b, rng);
            return out;
        },
        py::arg("mean"), py::arg("sigma"), py::arg("a"), py::arg("b"), py::arg("n") = 1,
        py::arg("seed") = 0);

    m.def(
        "run_optimizer",
        [](int zdt_variant, double sigma, const std::string& mode, int popsize, int generations,
           int n, int nR, int nS, int N, std::uint64_t seed) {
            ZdtSpec spec{zdt_variant, N};
            auto problem = make_noisy_zdt(spec, sigma);
            OptimizerConfig oc;
            oc.popsize = popsize;
            oc.generations = generations;
            oc.samples_per_eval = n;
            oc.nR = nR;
            oc.nS = nS;
            oc.mode = parse_mode(mode);
            oc.seed = seed;
            auto history = run(problem, oc);
            py::list rows;
            for (const auto& row : history.rows) {
                py::dict r;
                r["generation"] = row.generation;
                r["evaluations"] = row.evaluations;
                r["delta_hv"] = row.delta_hv;
                rows.append(r);
            }
            return rows;
        },
        py::arg("zdt_variant"), py::arg("sigma"), py::arg("mode") = "qdom",
        py::arg("popsize") = 20, py::arg("generations") = 10, py::arg("n") = 64,
        py::arg("nR") = 8, py::arg("nS") = 8, py::arg("N") = 30, py::arg("seed") = 0);
}
