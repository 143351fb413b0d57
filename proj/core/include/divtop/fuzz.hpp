#ifndef DIVTOP_FUZZ_HPP
#define DIVTOP_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divtop/divisor_complexes.hpp"

namespace divtop {

/**
 * Small deterministic PRNG (splitmix64). Used instead of <random>
 * distributions so that identical seeds reproduce identical instances on
 * every platform and standard library.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /** Uniform-ish value in [0, n). */
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    std::uint64_t state_;
};

struct FuzzConfig {
    std::uint64_t trials = 500;
    std::size_t max_elems = 7;
    Label max_value = 1000;
    std::uint64_t seed = 7;
    unsigned jobs = 1;
    std::size_t loops_per_instance = 2;
};

struct CheckCounter {
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
};

struct FuzzSummary {
    FuzzConfig config;
    std::uint64_t empty_star = 0;
    std::uint64_t connected = 0;
    std::uint64_t disconnected = 0;
    std::uint64_t torsion_instances = 0;

    CheckCounter subset_reversal;
    CheckCounter connectivity_equivalence;
    CheckCounter dimension_identity;
    CheckCounter near_surjectivity;
    CheckCounter h1_equality;
    CheckCounter induced_isomorphism;
    CheckCounter presentation_agreement;
    CheckCounter roundtrip_common;     // eta*^-1(eta*(L)) vs L, per loop
    CheckCounter roundtrip_prime;      // eta*(eta*^-1(L')) vs L', per loop
    CheckCounter p_group_triviality;   // only counted when the shortcut applies

    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first_failing_trial;
    std::string first_failure;

    bool all_passed() const { return failures == 0; }
    std::string render() const;
};

/** The random values drawn for one trial (before normalization). */
std::vector<Label> fuzz_instance(const FuzzConfig& config, std::uint64_t trial);

/**
 * Runs every property check on `trials` seeded random sets. Trials are
 * independent and may run on several threads; results merge by trial
 * index, so the summary does not depend on scheduling.
 */
FuzzSummary run_fuzz(const FuzzConfig& config);

} // namespace divtop

#endif
