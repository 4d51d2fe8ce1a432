#ifndef QDOM_RNG_HPP
#define QDOM_RNG_HPP

#include <cstdint>
#include <random>

namespace qdom {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic random stream. All randomness in the library flows through
// this class so that runs are bit-reproducible for a given seed; distribution
// sampling avoids std:: distributions on purpose (their output is
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform on [0,1), 53-bit resolution
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal();  // standard normal via inverse CDF (stats.hpp)

    // Derive an independent stream keyed on (this seed, key path). Used to
    // give each candidate / replication its own stream so that evaluation
    // order cannot change results.
    static Rng substream(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2 = 0,
                         std::uint64_t k3 = 0) {
        std::uint64_t s = splitmix64(seed);
        s = splitmix64(s ^ k1);
        s = splitmix64(s ^ k2);
        s = splitmix64(s ^ k3);
        return Rng(s);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qdom

#endif
