#include "hfsurv/sim/rng.hpp"

#include "hfsurv/core/math.hpp"

#include <cmath>

namespace hfsurv::sim {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}
} // namespace

Rng Rng::child(std::string_view tag) const {
    return Rng(splitmix64(seed_ ^ fnv1a(tag)));
}

double Rng::uniform() {
    // 53-bit mantissa fill, uniform in [0, 1).
    return (engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
}

int Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    // Inversion by sequential search; fine for the small means used here.
    double p = std::exp(-mean);
    double cdf = p;
    double u = uniform();
    int k = 0;
    while (u > cdf && k < 10000) {
        ++k;
        p *= mean / k;
        cdf += p;
    }
    return k;
}

} // namespace hfsurv::sim
