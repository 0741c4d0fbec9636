#include "probplan/bench.h"

#include "probplan/asp.h"
#include "probplan/errors.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

using namespace std;

namespace probplan {
TrialStats unattempted(const string &problem) {
    TrialStats stats;
    stats.problem = problem;
    stats.attempted = false;
    return stats;
}

RunOutcome simulate_policy(Bellman &ctx, const SolveResult &result, Rng &rng) {
    RunOutcome run;
    SearchSpace &space = ctx.space();
    StateRef s = space.initial();
    const SolverConfig &cfg = ctx.config();
    while (!space.is_goal(s)) {
        if (run.steps >= cfg.trial_cap || ctx.settle(s))
            return run;
        auto it = result.policy.find(s);
        OpId a = it != result.policy.end() ? it->second : ctx.greedy(s);
        run.cost += space.problem().operators[a].cost;
        ++run.steps;
        s = ctx.sample(s, a, rng);
    }
    run.reached_goal = true;
    return run;
}

namespace {
void record(TrialStats &stats, const RunOutcome &run, double &cost_sum, double &step_sum) {
    ++stats.runs;
    step_sum += run.steps;
    if (run.reached_goal) {
        ++stats.successful;
        cost_sum += run.cost;
    } else {
        ++stats.failed;
    }
}
}

TrialStats run_trials(const GroundProblem &p, Heuristic &h, Algorithm algorithm,
                      const SolverConfig &cfg, size_t runs, size_t size_hint) {
    if (runs < 1)
        throw InputError("at least one run is required");
    auto start = chrono::steady_clock::now();
    SearchSpace space(p, size_hint);
    Bellman ctx(space, h, cfg);
    TrialStats stats;
    stats.problem = p.name;
    double cost_sum = 0;
    double step_sum = 0;

    if (algorithm == Algorithm::asp) {
        Asp asp(ctx);
        for (size_t i = 0; i < runs; ++i) {
            Rng rng(derive_seed(cfg.seed, i));
            AspTrace trace = asp.run(rng);
            record(stats, {trace.reached_goal, trace.actions.size(), trace.cost}, cost_sum, step_sum);
        }
    } else {
        SolveResult result = solve(algorithm, ctx);
        for (size_t i = 0; i < runs; ++i) {
            Rng rng(derive_seed(cfg.seed, i));
            record(stats, simulate_policy(ctx, result, rng), cost_sum, step_sum);
        }
    }

    chrono::duration<double, milli> elapsed = chrono::steady_clock::now() - start;
    stats.time_ms = elapsed.count() / runs;
    stats.mean_steps = step_sum / runs;
    stats.mean_cost = stats.successful ? cost_sum / stats.successful : 0;
    return stats;
}

string report(const vector<TrialStats> &stats) {
    ostringstream out;
    out << "problem\truns\tfailed\tsuccessful\ttime\tcost\n";
    const char *dash = "—";
    for (const TrialStats &s : stats) {
        out << s.problem;
        if (!s.attempted) {
            for (int i = 0; i < 5; ++i)
                out << '\t' << dash;
            out << '\n';
            continue;
        }
        char cost[64];
        snprintf(cost, sizeof cost, "%.1f", s.mean_cost);
        out << '\t' << s.runs << '\t' << s.failed << '\t' << s.successful << '\t'
            << llround(s.time_ms) << '\t' << cost << '\n';
    }
    return out.str();
}
}
