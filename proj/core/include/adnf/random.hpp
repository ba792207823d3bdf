#ifndef ADNF_RANDOM_HPP
#define ADNF_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace adnf {

// Seeded generator with explicit sampling formulas. The standard library's
// distributions are implementation-defined, so uniform and normal draws are
// derived directly from the mt19937_64 bit stream to keep seeded outputs
// identical across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Box-Muller transform; consumes exactly two uniforms per draw.
    double normal(double mean, double stddev) {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925287 * u2;
        return mean + stddev * r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace adnf

#endif  // ADNF_RANDOM_HPP
