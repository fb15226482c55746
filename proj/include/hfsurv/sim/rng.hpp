#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace hfsurv::sim {

/**
 * Deterministic random stream.
 *
 * std::mt19937_64 is fully specified by the standard, but the distribution
 * adaptors (std::normal_distribution et al.) are implementation-defined, so
 * this class rolls its own transforms: products must be byte-identical for a
 * fixed scenario + seed on any conforming toolchain.
 *
 * Independent per-stage substreams are derived with child(tag): the stage tag
 * is hashed (FNV-1a) and mixed with the parent seed through splitmix64, so
 * adding or reordering draws in one stage never perturbs another.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    Rng child(std::string_view tag) const;

    // Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller (pair cached).
    double normal();
    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    // Poisson by inversion; intended for small means (clutter counts).
    int poisson(double mean);

    std::uint64_t raw() { return engine_(); }
    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// splitmix64: the standard finalizer-style mixer, used for seed derivation.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace hfsurv::sim
