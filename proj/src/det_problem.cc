#include "probplan/det_problem.h"

using namespace std;

namespace probplan {
namespace {
DetProblem split_outcomes(const GroundProblem &p, Relaxation origin) {
    DetProblem det;
    det.origin = origin;
    GroundProblem &q = det.problem;
    q.name = p.name;
    q.domain_name = p.domain_name;
    q.atoms = p.atoms;
    q.init = p.init;
    q.goal_pos = p.goal_pos;
    q.goal_neg = p.goal_neg;
    for (const GroundOperator &op : p.operators) {
        for (size_t i = 0; i < op.outcomes.size(); ++i) {
            GroundOperator split;
            split.id = static_cast<OpId>(q.operators.size());
            split.name = op.outcomes.size() == 1 ? op.name : op.name + "#" + to_string(i + 1);
            split.pre_pos = op.pre_pos;
            split.pre_neg = op.pre_neg;
            split.cost = op.cost;
            GroundOutcome outcome = op.outcomes[i];
            outcome.probability = 1.0;
            split.outcomes.push_back(std::move(outcome));
            q.operators.push_back(std::move(split));
            det.source.emplace_back(op.id, i);
        }
    }
    return det;
}
}

DetProblem make_min_min(const GroundProblem &p) {
    return split_outcomes(p, Relaxation::min_min);
}

DetProblem make_strips(const GroundProblem &p) {
    return split_outcomes(p, Relaxation::strips);
}
}
