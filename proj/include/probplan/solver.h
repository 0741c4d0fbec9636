#ifndef PROBPLAN_SOLVER_H
#define PROBPLAN_SOLVER_H

#include "heuristic.h"
#include "rng.h"
#include "search_space.h"
#include "value_table.h"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace probplan {
enum class Algorithm {vi, lrtdp, hdp, asp};

std::optional<Algorithm> parse_algorithm(const std::string &name);
std::string algorithm_name(Algorithm algorithm);

struct SolverConfig {
    double epsilon = 1e-3;
    double weight = 1;
    double dead_end_value = 1e6;
    std::size_t trial_cap = 10000;
    std::size_t lookahead = 0;
    std::uint64_t seed = 20040601;
    // Wall-clock limit for one solve in seconds; zero means unlimited.
    double budget_seconds = 0;
    // Absolute deadline shared with work done before the solve; takes precedence over the budget.
    std::optional<std::chrono::steady_clock::time_point> deadline;
    // vi refuses to enumerate more reachable states than this.
    std::size_t state_limit = 10000000;
    std::function<void(std::size_t iteration, double v0, double residual)> progress;

    void validate() const;
};

struct SolveResult {
    double v0 = 0;
    std::map<StateRef, OpId> policy;
    // States reachable from s0 under the greedy policy, breadth-first, goals and dead ends included.
    std::vector<StateRef> envelope;
    std::size_t states_expanded = 0;
    std::size_t backups = 0;
    std::size_t iterations = 0;
    bool converged = false;
};

/*
  Value function plus the Bellman operators over one search space. Values
  are created on first touch: goals get 0 and are solved, other states get
  min(W * h(s), D) where D is the dead-end value.
*/
class Bellman {
    SearchSpace &space_;
    Heuristic &heuristic_;
    SolverConfig config_;
    ValueTable values_;
    DeadEndDetector dead_ends_;
    std::vector<std::uint32_t> marks_;
    std::uint32_t epoch_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::size_t backups_ = 0;

public:
    Bellman(SearchSpace &space, Heuristic &heuristic, const SolverConfig &config);

    SearchSpace &space() {return space_;}
    const SolverConfig &config() const {return config_;}
    std::size_t backups() const {return backups_;}

    ValueEntry &entry(StateRef s);
    double value(StateRef s) {return entry(s).value;}
    bool solved(StateRef s) {return entry(s).solved;}
    void set_value(StateRef s, double v) {entry(s).value = v;}

    // True for goals and dead ends; dead ends are fixed at D and labeled solved.
    bool settle(StateRef s);
    bool is_dead_end(StateRef s) {return settle(s) && entry(s).dead;}

    double qvalue(StateRef s, OpId a);
    // Minimum q-value and its operator, lowest id on ties. Requires applicable operators.
    std::pair<OpId, double> best(StateRef s);
    double residual(StateRef s);
    OpId greedy(StateRef s);
    // Returns |change| of V(s).
    double backup(StateRef s);
    bool check_solved(StateRef s);
    StateRef sample(StateRef s, OpId a, Rng &rng);

    void start_clock();
    void check_clock();

    // Scratch marks for traversals; begin_marks() invalidates earlier marks.
    void begin_marks();
    bool mark(StateRef s);
};

SolveResult vi(Bellman &ctx);
SolveResult lrtdp(Bellman &ctx);
// Runs labeled trials until s0 is solved; returns the number of trials.
std::size_t lrtdp_from(Bellman &ctx, StateRef s0, Rng &rng);
SolveResult hdp(Bellman &ctx);
SolveResult solve(Algorithm algorithm, Bellman &ctx);

// Greedy policy over the states reachable from s under it.
void extract_policy(Bellman &ctx, StateRef s, SolveResult &result);
}

#endif
