#ifndef PROBPLAN_FF_H
#define PROBPLAN_FF_H

#include "det_problem.h"
#include "heuristic.h"
#include "state.h"

#include <vector>

namespace probplan {
struct RelaxedPlan {
    bool solvable = false;
    // Distinct operators of the extracted plan, ordered by layer and then id.
    std::vector<OpId> operators;
};

// Relaxed planning graph from s, then backward extraction with earliest-layer achievers.
RelaxedPlan ff_plan(const DetProblem &det, const State &s);
double ff_eval(const DetProblem &det, const State &s, double dead_end_value);

class FfHeuristic : public Heuristic {
    const DetProblem &det_;
    double dead_end_value_;

protected:
    double compute(const State &s) override {return ff_eval(det_, s, dead_end_value_);}

public:
    FfHeuristic(const DetProblem &det, double dead_end_value)
        : det_(det), dead_end_value_(dead_end_value) {}
    std::string name() const override {return "ff";}
    bool admissible() const override {return false;}
};
}

#endif
