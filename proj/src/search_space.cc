#include "probplan/search_space.h"

#include <deque>
#include <unordered_map>

using namespace std;

namespace probplan {
SearchSpace::SearchSpace(const GroundProblem &problem, size_t size_hint)
    : problem_(problem), store_(problem.atom_count(), size_hint) {
}

StateRef SearchSpace::initial() {
    return store_.intern(initial_state(problem_));
}

SearchSpace::Node &SearchSpace::node(StateRef s) {
    if (s.id >= nodes_.size())
        nodes_.resize(s.id + 1);
    Node &n = nodes_[s.id];
    if (!n.expanded) {
        StateView v = store_.view(s);
        n.goal = probplan::is_goal(problem_, v);
        n.ops = probplan::applicable(problem_, v);
        n.successors.resize(n.ops.size());
        n.expanded = true;
    }
    return n;
}

const SearchSpace::OpCache &SearchSpace::op_cache(StateRef s, OpId op) {
    Node &n = node(s);
    size_t index = 0;
    while (index < n.ops.size() && n.ops[index] != op)
        ++index;
    OpCache &cache = n.successors.at(index);
    if (cache.per_outcome.empty()) {
        const GroundOperator &o = problem_.operators[op];
        State current = store_.get(s);
        for (const GroundOutcome &out : o.outcomes) {
            StateRef next = store_.intern(apply_outcome(current.view(), out));
            cache.per_outcome.push_back(next);
            bool merged = false;
            for (Successor &succ : cache.merged) {
                if (succ.state == next) {
                    succ.probability += out.probability;
                    merged = true;
                    break;
                }
            }
            if (!merged)
                cache.merged.push_back({out.probability, next});
        }
    }
    return cache;
}

DeadEndDetector::Status &DeadEndDetector::status(StateRef s) {
    if (s.id >= status_.size())
        status_.resize(max<size_t>(s.id + 1, status_.size() * 2), Status::unknown);
    return status_[s.id];
}

bool DeadEndDetector::is_dead_end(StateRef s) {
    Status known = status(s);
    if (known != Status::unknown)
        return known == Status::dead;

    // Breadth-first over the determinization, stopping at the first state known to reach a goal.
    unordered_map<StateRef, StateRef> parent;
    deque<StateRef> queue;
    vector<StateRef> visited;
    parent.emplace(s, s);
    queue.push_back(s);
    optional<StateRef> found;
    bool exhausted = false;
    while (!queue.empty()) {
        StateRef current = queue.front();
        queue.pop_front();
        visited.push_back(current);
        if (space_.is_goal(current) || status(current) == Status::alive) {
            found = current;
            break;
        }
        if (visited.size() > node_budget_) {
            exhausted = true;
            break;
        }
        for (OpId op : space_.applicable(current)) {
            for (const Successor &succ : space_.successors(current, op)) {
                if (status(succ.state) == Status::dead || parent.count(succ.state))
                    continue;
                parent.emplace(succ.state, current);
                queue.push_back(succ.state);
            }
        }
    }
    if (found) {
        for (StateRef t = *found;; t = parent.at(t)) {
            status(t) = Status::alive;
            if (t == s)
                break;
        }
        return false;
    }
    if (exhausted)
        return false;
    // The whole closure was explored without meeting a goal.
    for (StateRef t : visited)
        status(t) = Status::dead;
    return true;
}
}
