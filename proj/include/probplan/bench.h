#ifndef PROBPLAN_BENCH_H
#define PROBPLAN_BENCH_H

#include "ground_problem.h"
#include "heuristic.h"
#include "solver.h"

#include <cstddef>
#include <string>
#include <vector>

namespace probplan {
struct TrialStats {
    std::string problem;
    bool attempted = true;
    std::size_t runs = 0;
    std::size_t failed = 0;
    std::size_t successful = 0;
    double time_ms = 0;
    // Over successful runs only; 0 when none succeeded.
    double mean_cost = 0;
    double mean_steps = 0;
};

TrialStats unattempted(const std::string &problem);

struct RunOutcome {
    bool reached_goal = false;
    std::size_t steps = 0;
    double cost = 0;
};

/*
  Offline mode (vi, lrtdp, hdp) solves once and then simulates the greedy
  policy; online mode (asp) plans while acting, keeping its values across
  runs. Run i samples with derive_seed(cfg.seed, i). Throws SolverFailure
  when the offline solve exceeds the configured budget.
*/
TrialStats run_trials(const GroundProblem &p, Heuristic &h, Algorithm algorithm,
                      const SolverConfig &cfg, std::size_t runs, std::size_t size_hint = 49999);

// Simulates one run of a solved policy, falling back to the greedy action off the policy.
RunOutcome simulate_policy(Bellman &ctx, const SolveResult &result, Rng &rng);

std::string report(const std::vector<TrialStats> &stats);
}

#endif
