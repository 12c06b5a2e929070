#pragma once

#include <cmath>
#include <cstdint>

#include "stablepoly/numeric.hpp"

namespace stablepoly {

// Counter-mode splittable generator (splitmix64 core). Per-trial streams are
// derived from (master_seed, trial_index), so reports are identical no matter
// how trials are scheduled across threads.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static Rng stream(std::uint64_t master_seed, std::uint64_t index) {
        return Rng(mix(master_seed ^ mix(index * 0xd1342543de82ef95ULL + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits; avoids std::uniform_real_distribution so
    // the byte stream does not depend on the standard library build.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Integer k, log-uniform in [kmin, kmax].
    std::int64_t log_uniform_int(std::int64_t kmin, std::int64_t kmax) {
        double lo = std::log(static_cast<double>(kmin));
        double hi = std::log(static_cast<double>(kmax) + 1.0);
        auto k = static_cast<std::int64_t>(std::floor(std::exp(lo + uniform01() * (hi - lo))));
        if (k < kmin) k = kmin;
        if (k > kmax) k = kmax;
        return k;
    }

    // Positive rational k/denominator with k log-uniform in [kmin, kmax].
    Rat positive_rational(std::int64_t kmin, std::int64_t kmax, std::int64_t denominator) {
        return make_rat(log_uniform_int(kmin, kmax), denominator);
    }

  private:
    std::uint64_t state_;
};

}  // namespace stablepoly
