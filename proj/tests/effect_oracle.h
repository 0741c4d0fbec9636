#ifndef PROBPLAN_TESTS_EFFECT_ORACLE_H
#define PROBPLAN_TESTS_EFFECT_ORACLE_H

#include <random>
#include <string>

namespace support {
// A one-schema domain "act ?x" over predicates p0..p3 and (q ?o), constants o1 and o2.
std::string random_effect_domain(std::mt19937_64 &rng, int max_depth);
extern const char *const effect_problem;

struct NormalizationCheck {
    // Largest total-variation distance between original and normalized successor distributions.
    double max_distance = 0;
    std::size_t states_checked = 0;
    // Count of (state, binding) pairs where the number of applicable copies was wrong.
    std::size_t copy_mismatches = 0;
};

// Compares the parsed effect tree, evaluated by brute force, with the ground operators in every state.
NormalizationCheck check_normalization(const std::string &domain_text);
}

#endif
