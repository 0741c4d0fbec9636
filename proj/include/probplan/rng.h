#ifndef PROBPLAN_RNG_H
#define PROBPLAN_RNG_H

#include "ground_problem.h"

#include <cstddef>
#include <cstdint>
#include <random>

namespace probplan {
// Mersenne twister with 53-bit uniform doubles; identical seeds give identical streams.
class Rng {
    std::mt19937_64 engine_;

public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() {return engine_();}
    double uniform() {return static_cast<double>(engine_() >> 11) * 0x1.0p-53;}
    std::size_t below(std::size_t n) {return static_cast<std::size_t>(uniform() * n);}
};

// Independent per-run seed: splitmix64 of seed and index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Inverse CDF over the outcome list in declaration order.
std::size_t sample_outcome(const GroundOperator &op, double u);
}

#endif
