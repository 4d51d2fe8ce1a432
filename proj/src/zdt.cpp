#include "qdom/zdt.hpp"

#include <cmath>
#include <stdexcept>

#include "qdom/stats.hpp"

namespace qdom {

void ZdtSpec::validate() const {
    if (variant != 1 && variant != 2 && variant != 3 && variant != 4 && variant != 6)
        throw std::invalid_argument("ZdtSpec: variant must be one of {1,2,3,4,6}");
    if (N < 2) throw std::invalid_argument("ZdtSpec: N must be >= 2");
}

double ZdtSpec::lower(int i) const {
    return (variant == 4 && i > 0) ? -5.0 : 0.0;
}

double ZdtSpec::upper(int i) const {
    return (variant == 4 && i > 0) ? 5.0 : 1.0;
}

ObjPair zdt_eval(const ZdtSpec& spec, const std::vector<double>& z) {
    spec.validate();
    if (static_cast<int>(z.size()) != spec.N)
        throw std::invalid_argument("zdt_eval: wrong decision dimension");
    for (int i = 0; i < spec.N; ++i)
        if (z[i] < spec.lower(i) - 1e-12 || z[i] > spec.upper(i) + 1e-12)
            throw std::invalid_argument("zdt_eval: input outside the variable box");

    const int N = spec.N;
    double tail = 0.0;
    for (int i = 1; i < N; ++i) tail += z[i];

    switch (spec.variant) {
        case 1: {
            double f1 = z[0];
            double g = 1.0 + 9.0 * tail / (N - 1);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case 2: {
            double f1 = z[0];
            double g = 1.0 + 9.0 * tail / (N - 1);
            double h = f1 / g;
            return {f1, g * (1.0 - h * h)};
        }
        case 3: {
            double f1 = z[0];
            double g = 1.0 + 9.0 * tail / (N - 1);
            double h = f1 / g;
            return {f1, g * (1.0 - std::sqrt(h) - h * std::sin(10.0 * M_PI * f1))};
        }
        case 4: {
            double f1 = z[0];
            double g = 1.0 + 10.0 * (N - 1);
            for (int i = 1; i < N; ++i)
                g += z[i] * z[i] - 10.0 * std::cos(4.0 * M_PI * z[i]);
            return {f1, g * (1.0 - std::sqrt(f1 / g))};
        }
        case 6: {
            double s = std::sin(6.0 * M_PI * z[0]);
            double f1 = 1.0 - std::exp(-4.0 * z[0]) * s * s * s * s * s * s;
            double g = 1.0 + 9.0 * std::pow(tail / (N - 1), 0.25);
            double h = f1 / g;
            return {f1, g * (1.0 - h * h)};
        }
        default:
            throw std::logic_error("zdt_eval: unreachable");
    }
}

ObjPair noisy_eval(const ZdtSpec& spec, const std::vector<double>& x, double sigma, Rng& rng) {
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = truncnorm_sample(x[i], sigma, spec.lower(static_cast<int>(i)),
                                spec.upper(static_cast<int>(i)), rng);
    return zdt_eval(spec, z);
}

namespace {

// f1 intervals on which the front is defined; one segment except for ZDT3.
std::vector<std::pair<double, double>> front_segments(const ZdtSpec& spec) {
    switch (spec.variant) {
        case 3:
            return {{0.0, 0.0830015349},
                    {0.1822287280, 0.2577623634},
                    {0.4093136748, 0.4538821041},
                    {0.6183967944, 0.6525117038},
                    {0.8233317983, 0.8518328654}};
        case 6:
            return {{0.2807753191, 1.0}};
        default:
            return {{0.0, 1.0}};
    }
}

double front_f2(const ZdtSpec& spec, double f1) {
    switch (spec.variant) {
        case 1:
        case 4:
            return 1.0 - std::sqrt(f1);
        case 2:
        case 6:
            return 1.0 - f1 * f1;
        case 3:
            return 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * M_PI * f1);
        default:
            throw std::logic_error("front_f2: unreachable");
    }
}

}  // namespace

std::vector<ObjPair> analytic_front(const ZdtSpec& spec, int count) {
    spec.validate();
    if (count < 2) throw std::invalid_argument("analytic_front: count must be >= 2");
    auto segments = front_segments(spec);
    double total = 0.0;
    for (auto [a, b] : segments) total += b - a;

    std::vector<ObjPair> front;
    front.reserve(count);
    for (auto [a, b] : segments) {
        int pts = std::max(2, static_cast<int>(std::lround(count * (b - a) / total)));
        for (int i = 0; i < pts; ++i) {
            double f1 = a + (b - a) * i / (pts - 1);
            front.push_back({f1, front_f2(spec, f1)});
        }
    }
    return front;
}

}  // namespace qdom
