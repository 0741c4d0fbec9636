#ifndef PROBPLAN_ASP_H
#define PROBPLAN_ASP_H

#include "solver.h"

#include <utility>
#include <vector>

namespace probplan {
struct AspTrace {
    std::vector<OpId> actions;
    double cost = 0;
    bool reached_goal = false;
    bool dead_end = false;
};

/*
  Real-time action selection. Each step picks the action minimizing a
  depth-bounded lookahead over the current values (depth 0 is the plain
  one-step greedy choice), stores the backed-up value at the current state
  and executes the action. Values persist in the Bellman context across
  steps and across runs.
*/
class Asp {
    Bellman &ctx_;

    double lookahead_value(StateRef s, std::size_t depth);

public:
    explicit Asp(Bellman &ctx) : ctx_(ctx) {}

    std::pair<OpId, double> choose(StateRef s);
    AspTrace run(Rng &rng);
};
}

#endif
