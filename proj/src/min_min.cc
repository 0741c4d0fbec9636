#include "probplan/min_min.h"

#include "probplan/errors.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

using namespace std;

namespace probplan {
namespace {
constexpr double unsolved = numeric_limits<double>::infinity();

bool within(double f, double bound) {
    return f <= bound + 1e-9 * max(1.0, fabs(bound));
}
}

double MinMinIdaSearch::lower_bound(const State &s) {
    auto it = exact_.find(s);
    if (it != exact_.end())
        return it->second;
    return min(max(base_.value(s), 0.0), dead_end_value_);
}

double MinMinIdaSearch::search(const State &s, double g, double bound) {
    if (++nodes_ > node_budget_)
        throw BudgetExceeded("min-min IDA* exceeded its node budget");
    const GroundProblem &p = det_.problem;
    bool goal = is_goal(p, s.view());
    double h = goal ? 0.0 : lower_bound(s);
    if (h >= dead_end_value_)
        return unsolved;
    // Reaching a state again at no smaller g is dominated, whether the first
    // visit was expanded or cut (a cut already fed next_bound_).
    auto [seen, fresh] = g_table_.try_emplace(s, g);
    if (!fresh) {
        if (seen->second <= g)
            return unsolved;
        seen->second = g;
    }
    double f = g + h;
    if (!within(f, bound)) {
        next_bound_ = min(next_bound_, f);
        return unsolved;
    }
    // A goal only counts once it fits under the bound, or the first solution may not be optimal.
    if (goal)
        return 0;
    auto known = exact_.find(s);
    if (known != exact_.end())
        return known->second;
    for (OpId op : applicable(p, s.view())) {
        double cost = p.operators[op].cost;
        State next = apply_outcome(s.view(), det_.effect(op));
        double rest = search(next, g + cost, bound);
        if (rest < unsolved) {
            // The first solution found is optimal, hence so is each suffix.
            double total = cost + rest;
            exact_[s] = total;
            return total;
        }
    }
    return unsolved;
}

bool MinMinIdaSearch::goal_reachable(const State &s) {
    const GroundProblem &p = det_.problem;
    unordered_set<State> seen{s};
    vector<State> open{s};
    while (!open.empty()) {
        State current = std::move(open.back());
        open.pop_back();
        if (is_goal(p, current.view()))
            return true;
        if (++nodes_ > node_budget_)
            throw BudgetExceeded("min-min IDA* exceeded its node budget");
        for (OpId op : applicable(p, current.view())) {
            State next = apply_outcome(current.view(), det_.effect(op));
            if (seen.insert(next).second)
                open.push_back(std::move(next));
        }
    }
    return false;
}

double MinMinIdaSearch::solve(const State &s) {
    if (is_goal(det_.problem, s.view()))
        return 0;
    double bound = lower_bound(s);
    if (bound >= dead_end_value_)
        return dead_end_value_;
    nodes_ = 0;
    // Without this, deepening over a goal-free component would only stop at D.
    if (!goal_reachable(s)) {
        exact_[s] = dead_end_value_;
        return dead_end_value_;
    }
    for (;;) {
        next_bound_ = unsolved;
        g_table_.clear();
        double cost = search(s, 0, bound);
        if (cost < unsolved)
            return min(cost, dead_end_value_);
        if (next_bound_ == unsolved || next_bound_ >= dead_end_value_) {
            exact_[s] = dead_end_value_;
            return dead_end_value_;
        }
        bound = next_bound_;
    }
}

double min_min_ida(const State &s, const DetProblem &det, Heuristic &base,
                   double dead_end_value, size_t node_budget) {
    return MinMinIdaSearch(det, base, dead_end_value, node_budget).solve(s);
}

namespace {
SolverConfig deterministic_config(double dead_end_value) {
    SolverConfig cfg;
    // Integer costs give integer values, so this only ever accepts exact consistency there.
    cfg.epsilon = 1e-9;
    cfg.weight = 1;
    cfg.dead_end_value = dead_end_value;
    cfg.trial_cap = 1000000;
    return cfg;
}
}

MinMinLrtdpSearch::MinMinLrtdpSearch(const DetProblem &det, Heuristic &base,
                                     double dead_end_value, size_t backup_budget)
    : space_(det.problem, 1009), bellman_(space_, base, deterministic_config(dead_end_value)),
      rng_(1), backup_budget_(backup_budget) {
}

double MinMinLrtdpSearch::solve(const State &s) {
    StateRef ref = space_.intern(s);
    size_t start = bellman_.backups();
    while (!bellman_.solved(ref)) {
        lrtdp_from(bellman_, ref, rng_);
        if (bellman_.backups() - start > backup_budget_)
            throw BudgetExceeded("min-min LRTDP exceeded its backup budget");
    }
    return bellman_.value(ref);
}

double min_min_lrtdp(const State &s, const DetProblem &det, Heuristic &base,
                     double dead_end_value) {
    return MinMinLrtdpSearch(det, base, dead_end_value).solve(s);
}

double MinMinIdaHeuristic::compute(const State &s) {
    try {
        return search_.solve(s);
    } catch (const BudgetExceeded &) {
        return min(base_.value(s), dead_end_value_);
    }
}

double MinMinLrtdpHeuristic::compute(const State &s) {
    try {
        return search_.solve(s);
    } catch (const BudgetExceeded &) {
        return min(base_.value(s), dead_end_value_);
    }
}
}
