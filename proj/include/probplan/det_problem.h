#ifndef PROBPLAN_DET_PROBLEM_H
#define PROBPLAN_DET_PROBLEM_H

#include "ground_problem.h"

#include <cstddef>
#include <utility>
#include <vector>

namespace probplan {
enum class Relaxation {min_min, strips};

/*
  Deterministic relaxation: every outcome of every probabilistic operator
  becomes an operator of its own with the shared precondition and cost.
  The embedded problem has exactly one outcome (probability 1) per
  operator, so the state-space machinery applies to it unchanged.
*/
struct DetProblem {
    Relaxation origin = Relaxation::min_min;
    GroundProblem problem;
    // (source operator, outcome index) for each deterministic operator.
    std::vector<std::pair<OpId, std::size_t>> source;

    const std::vector<GroundOperator> &operators() const {return problem.operators;}
    const GroundOutcome &effect(OpId op) const {return problem.operators[op].outcomes.front();}
};

DetProblem make_min_min(const GroundProblem &p);
DetProblem make_strips(const GroundProblem &p);
}

#endif
