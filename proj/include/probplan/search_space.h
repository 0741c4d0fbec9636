#ifndef PROBPLAN_SEARCH_SPACE_H
#define PROBPLAN_SEARCH_SPACE_H

#include "ground_problem.h"
#include "state.h"
#include "state_store.h"

#include <cstddef>
#include <cstdint>
#include <deque>
#include <vector>

namespace probplan {
struct Successor {
    double probability;
    StateRef state;
};

/*
  Lazily expanded view of the reachable state graph over one store.
  Applicable operators and successor distributions are computed on first
  request and cached per state.
*/
class SearchSpace {
    struct OpCache {
        std::vector<StateRef> per_outcome;
        std::vector<Successor> merged;
    };
    struct Node {
        bool expanded = false;
        bool goal = false;
        std::vector<OpId> ops;
        std::vector<OpCache> successors;
    };

    const GroundProblem &problem_;
    StateStore store_;
    // A deque keeps references handed out by applicable() and successors() stable.
    std::deque<Node> nodes_;

    Node &node(StateRef s);
    const OpCache &op_cache(StateRef s, OpId op);

public:
    explicit SearchSpace(const GroundProblem &problem, std::size_t size_hint = 49999);

    const GroundProblem &problem() const {return problem_;}
    StateStore &store() {return store_;}
    const StateStore &store() const {return store_;}

    StateRef initial();
    StateRef intern(const State &s) {return store_.intern(s);}
    StateView view(StateRef s) const {return store_.view(s);}
    State state(StateRef s) const {return store_.get(s);}

    bool is_goal(StateRef s) {return node(s).goal;}
    const std::vector<OpId> &applicable(StateRef s) {return node(s).ops;}
    // Outcomes that lead to the same state are merged; order follows first appearance.
    const std::vector<Successor> &successors(StateRef s, OpId op) {return op_cache(s, op).merged;}
    // Successor of the i-th declared outcome, for inverse-CDF sampling.
    StateRef outcome_successor(StateRef s, OpId op, std::size_t outcome) {
        return op_cache(s, op).per_outcome[outcome];
    }
};

/*
  A non-goal state is a dead end when no goal state is reachable from it
  in the all-outcomes determinization (no applicable operators being the
  simplest case). Answers are memoized; a search that exceeds the node
  budget reports the state as alive, which is the safe direction.
*/
class DeadEndDetector {
    enum class Status : std::uint8_t {unknown, alive, dead};

    SearchSpace &space_;
    std::size_t node_budget_;
    std::vector<Status> status_;

    Status &status(StateRef s);

public:
    explicit DeadEndDetector(SearchSpace &space, std::size_t node_budget = 1000000)
        : space_(space), node_budget_(node_budget) {}

    bool is_dead_end(StateRef s);
};
}

#endif
