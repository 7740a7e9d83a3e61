#pragma once

#include <cstdint>
#include <vector>

#include "nvk/complex.hpp"

namespace nvk {

/// Deterministic, platform-independent generator (xoshiro-style core around
/// splitmix64 seeding); std::uniform_int_distribution is not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);          // uniform in [0, bound)
    std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive
    bool chance(int num, int den);                     // true with probability num/den

private:
    std::uint64_t s_[4];
};

struct RandomComplexSpec {
    int pair_count = 2;
    int free_count = 0;                 // closed generators with no partner
    std::vector<Rational> bar_lengths;  // empty: random small rationals
    int transvections = 8;              // basis-mixing moves
    int index_range = 4;                // base indices sampled from [0, range)
    GlobalParams params{1, Rational(10), 1};
    bool graded = true;
    std::uint64_t seed = 0;
    int action_denominator = 1000;
    bool distinct_actions_mod_lambda0 = true;  // resample until generic
    // keep every entry strictly increasing in base action (recap-free planted
    // pairs); makes the orbit arrow graph acyclic, which the frobenius model
    // requires
    bool monotone = false;
};

/// Random valid complex with a planted barcode: elementary pairs with the
/// requested bar lengths, mixed by random filtered transvections. The
/// conjugation preserves the barcode exactly, so the planted multiset is an
/// independent oracle for the elimination.
struct PlantedComplex {
    FilteredComplex complex;
    std::vector<Rational> planted_bars;  // sorted ascending
    int planted_infinite = 0;
};

PlantedComplex random_planted_complex(const RandomComplexSpec& spec);

}  // namespace nvk
