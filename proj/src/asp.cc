#include "probplan/asp.h"

#include "probplan/errors.h"

#include <algorithm>
#include <limits>

using namespace std;

namespace probplan {
double Asp::lookahead_value(StateRef s, size_t depth) {
    if (depth == 0 || ctx_.settle(s))
        return ctx_.value(s);
    const SolverConfig &cfg = ctx_.config();
    double best = numeric_limits<double>::infinity();
    for (OpId a : ctx_.space().applicable(s)) {
        double q = ctx_.space().problem().operators[a].cost;
        vector<Successor> succs = ctx_.space().successors(s, a);
        for (const Successor &succ : succs)
            q += succ.probability * lookahead_value(succ.state, depth - 1);
        best = min(best, q);
    }
    return min(best, cfg.dead_end_value);
}

pair<OpId, double> Asp::choose(StateRef s) {
    size_t depth = ctx_.config().lookahead;
    if (depth == 0)
        return ctx_.best(s);
    const vector<OpId> &ops = ctx_.space().applicable(s);
    if (ops.empty())
        throw DeadEnd();
    OpId arg = ops.front();
    double best = numeric_limits<double>::infinity();
    for (OpId a : ops) {
        double q = ctx_.space().problem().operators[a].cost;
        vector<Successor> succs = ctx_.space().successors(s, a);
        for (const Successor &succ : succs)
            q += succ.probability * lookahead_value(succ.state, depth);
        if (q < best) {
            best = q;
            arg = a;
        }
    }
    return {arg, best};
}

AspTrace Asp::run(Rng &rng) {
    const SolverConfig &cfg = ctx_.config();
    AspTrace trace;
    StateRef s = ctx_.space().initial();
    for (;;) {
        if (ctx_.space().is_goal(s)) {
            trace.reached_goal = true;
            break;
        }
        if (ctx_.settle(s)) {
            trace.dead_end = true;
            break;
        }
        if (trace.actions.size() >= cfg.trial_cap)
            break;
        auto [a, q] = choose(s);
        ctx_.set_value(s, min(q, cfg.dead_end_value));
        trace.actions.push_back(a);
        trace.cost += ctx_.space().problem().operators[a].cost;
        s = ctx_.sample(s, a, rng);
    }
    return trace;
}
}
