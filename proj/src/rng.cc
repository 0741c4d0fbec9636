#include "probplan/rng.h"

using namespace std;

namespace probplan {
uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

size_t sample_outcome(const GroundOperator &op, double u) {
    double cumulative = 0;
    for (size_t i = 0; i < op.outcomes.size(); ++i) {
        cumulative += op.outcomes[i].probability;
        if (u < cumulative)
            return i;
    }
    return op.outcomes.size() - 1;
}
}
