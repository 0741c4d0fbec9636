#ifndef PROBPLAN_MIN_MIN_H
#define PROBPLAN_MIN_MIN_H

#include "det_problem.h"
#include "heuristic.h"
#include "search_space.h"
#include "solver.h"

#include <cstddef>
#include <memory>
#include <unordered_map>

namespace probplan {
/*
  IDA* over the min-min relaxation, guided by an admissible base
  heuristic. Each iteration keeps a table of the cheapest g at which a
  state was expanded, so transpositions are searched once per iteration.
  Cost-to-go values along every optimal path found are kept and reused by
  later queries.
*/
class MinMinIdaSearch {
    const DetProblem &det_;
    Heuristic &base_;
    double dead_end_value_;
    std::size_t node_budget_;
    std::unordered_map<State, double> exact_;
    std::unordered_map<State, double> g_table_;
    std::size_t nodes_ = 0;
    double next_bound_ = 0;

    double lower_bound(const State &s);
    bool goal_reachable(const State &s);
    double search(const State &s, double g, double bound);

public:
    MinMinIdaSearch(const DetProblem &det, Heuristic &base, double dead_end_value,
                    std::size_t node_budget = 10000000)
        : det_(det), base_(base), dead_end_value_(dead_end_value), node_budget_(node_budget) {}

    // Throws BudgetExceeded when one query expands more than the node budget.
    double solve(const State &s);
};

double min_min_ida(const State &s, const DetProblem &det, Heuristic &base,
                   double dead_end_value, std::size_t node_budget = 10000000);

// Labeled LRTDP on the deterministic relaxation; solved labels persist between queries.
class MinMinLrtdpSearch {
    SearchSpace space_;
    Bellman bellman_;
    Rng rng_;
    std::size_t backup_budget_;

public:
    MinMinLrtdpSearch(const DetProblem &det, Heuristic &base, double dead_end_value,
                      std::size_t backup_budget = 10000000);

    double solve(const State &s);
};

double min_min_lrtdp(const State &s, const DetProblem &det, Heuristic &base,
                     double dead_end_value);

// Stack layers. A query over the node budget degrades to the base value.
class MinMinIdaHeuristic : public Heuristic {
    Heuristic &base_;
    double dead_end_value_;
    MinMinIdaSearch search_;

protected:
    double compute(const State &s) override;

public:
    MinMinIdaHeuristic(const DetProblem &det, Heuristic &base, double dead_end_value,
                       std::size_t node_budget = 10000000)
        : base_(base), dead_end_value_(dead_end_value),
          search_(det, base, dead_end_value, node_budget) {}
    std::string name() const override {return "min-min-ida*";}
};

class MinMinLrtdpHeuristic : public Heuristic {
    Heuristic &base_;
    double dead_end_value_;
    MinMinLrtdpSearch search_;

protected:
    double compute(const State &s) override;

public:
    MinMinLrtdpHeuristic(const DetProblem &det, Heuristic &base, double dead_end_value,
                         std::size_t backup_budget = 10000000)
        : base_(base), dead_end_value_(dead_end_value),
          search_(det, base, dead_end_value, backup_budget) {}
    std::string name() const override {return "min-min-lrtdp";}
};
}

#endif
