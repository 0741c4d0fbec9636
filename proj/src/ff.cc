#include "probplan/ff.h"

#include <algorithm>
#include <limits>
#include <set>

using namespace std;

namespace probplan {
namespace {
constexpr int unreached = numeric_limits<int>::max();
}

RelaxedPlan ff_plan(const DetProblem &det, const State &s) {
    const GroundProblem &p = det.problem;
    const auto &ops = p.operators;
    size_t n = p.atom_count();
    RelaxedPlan plan;

    vector<int> fact_layer(n, unreached);
    vector<int> op_layer(ops.size(), unreached);
    for (AtomId a : s.atoms())
        fact_layer[a] = 0;
    auto goals_reached = [&] {
        return all_of(p.goal_pos.begin(), p.goal_pos.end(),
                      [&](AtomId g) {return fact_layer[g] != unreached;});
    };

    int layer = 0;
    while (!goals_reached()) {
        vector<AtomId> fresh;
        for (OpId o = 0; o < ops.size(); ++o) {
            if (op_layer[o] != unreached)
                continue;
            const vector<AtomId> &pre = ops[o].pre_pos;
            if (!all_of(pre.begin(), pre.end(), [&](AtomId a) {return fact_layer[a] <= layer;}))
                continue;
            op_layer[o] = layer;
            for (AtomId a : det.effect(o).add)
                if (fact_layer[a] == unreached)
                    fresh.push_back(a);
        }
        if (fresh.empty())
            return plan;
        ++layer;
        for (AtomId a : fresh)
            fact_layer[a] = layer;
    }

    plan.solvable = true;
    int top = 0;
    for (AtomId g : p.goal_pos)
        top = max(top, fact_layer[g]);
    vector<set<AtomId>> goals(top + 1);
    for (AtomId g : p.goal_pos)
        if (fact_layer[g] > 0)
            goals[fact_layer[g]].insert(g);

    // Earliest layer at which a chosen operator already provides the atom.
    vector<int> provided(n, unreached);
    set<pair<int, OpId>> chosen;
    for (int l = top; l > 0; --l) {
        for (AtomId g : goals[l]) {
            if (provided[g] <= l - 1)
                continue;
            OpId best = 0;
            int best_layer = unreached;
            for (OpId o = 0; o < ops.size(); ++o) {
                if (op_layer[o] >= best_layer)
                    continue;
                const vector<AtomId> &add = det.effect(o).add;
                if (binary_search(add.begin(), add.end(), g)) {
                    best = o;
                    best_layer = op_layer[o];
                }
            }
            chosen.emplace(best_layer, best);
            for (AtomId a : det.effect(best).add)
                provided[a] = min(provided[a], best_layer);
            for (AtomId a : ops[best].pre_pos)
                if (fact_layer[a] > 0)
                    goals[fact_layer[a]].insert(a);
        }
    }
    for (auto [l, o] : chosen)
        if (find(plan.operators.begin(), plan.operators.end(), o) == plan.operators.end())
            plan.operators.push_back(o);
    return plan;
}

double ff_eval(const DetProblem &det, const State &s, double dead_end_value) {
    RelaxedPlan plan = ff_plan(det, s);
    if (!plan.solvable)
        return dead_end_value;
    return static_cast<double>(plan.operators.size());
}
}
