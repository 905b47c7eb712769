#ifndef BEREZIN_RNG_HPP
#define BEREZIN_RNG_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "berezin/rational.hpp"

namespace berezin {

// Seeded deterministic sampler. All randomness in the artifact flows
// through this class; given the same seed the stream is identical on every
// platform (raw mt19937_64 output with modulo mapping, no distributions).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on {lo, ..., hi}.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool coin() { return (next() & 1u) != 0; }

    // Evaluation-point component: numerator in [-9,9] \ {0}, denominator 10.
    Rational sample_weight_value() {
        int t = uniform_int(0, 17);
        int num = t < 9 ? t + 1 : -(t - 8);
        Rational q(num, 10);
        q.canonicalize();
        return q;
    }

    // One value per listed variable.
    std::map<std::string, Rational> sample_point(const std::vector<std::string>& vars) {
        std::map<std::string, Rational> pt;
        for (const auto& v : vars) pt[v] = sample_weight_value();
        return pt;
    }

    // Mixes a base seed with an instance index into a fresh stream seed, so
    // parallel harnesses stay deterministic regardless of scheduling.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t index) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace berezin

#endif
