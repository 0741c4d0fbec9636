#include "doctest.h"

#include "support.h"

#include "probplan/bench.h"

using namespace std;
using namespace probplan;

namespace {
SolverConfig config() {
    SolverConfig cfg;
    cfg.epsilon = 1e-4;
    return cfg;
}
}

TEST_CASE("LADDER offline lrtdp with zero succeeds every run at cost 2") {
    GroundProblem p = support::make_ladder();
    ZeroHeuristic zero;
    TrialStats s = run_trials(p, zero, Algorithm::lrtdp, config(), 30);
    CHECK(s.runs == 30);
    CHECK(s.failed == 0);
    CHECK(s.successful == 30);
    CHECK(s.mean_cost == 2);
    CHECK(s.mean_steps == 2);
    CHECK(s.time_ms >= 0);
}

TEST_CASE("CHAIN(0.5) offline takes two steps on average") {
    GroundProblem p = support::make_chain(0.5);
    for (Algorithm alg : {Algorithm::vi, Algorithm::lrtdp, Algorithm::hdp}) {
        ZeroHeuristic zero;
        TrialStats s = run_trials(p, zero, alg, config(), 1000);
        CHECK(s.failed == 0);
        CHECK(s.mean_steps >= 1.8);
        CHECK(s.mean_steps <= 2.2);
        CHECK(s.mean_cost == s.mean_steps);
    }
}

TEST_CASE("DEAD online asp fails about half the runs") {
    GroundProblem p = support::make_dead();
    ZeroHeuristic zero;
    TrialStats s = run_trials(p, zero, Algorithm::asp, config(), 30);
    CHECK(s.failed + s.successful == 30);
    CHECK(s.failed > 0);
    CHECK(s.successful > 0);
    CHECK(s.mean_cost == 1);
}

TEST_CASE("identical configurations reproduce identical statistics") {
    GroundProblem p = support::ground_files("blocksworld-domain.pddl", "blocksworld-3.pddl");
    for (Algorithm alg : {Algorithm::lrtdp, Algorithm::asp}) {
        ZeroHeuristic a, b;
        TrialStats x = run_trials(p, a, alg, config(), 25);
        TrialStats y = run_trials(p, b, alg, config(), 25);
        CHECK(x.failed == y.failed);
        CHECK(x.successful == y.successful);
        CHECK(x.mean_cost == y.mean_cost);
        CHECK(x.mean_steps == y.mean_steps);
        CHECK(x.failed + x.successful == x.runs);
    }
    SolverConfig other = config();
    other.seed = 99;
    ZeroHeuristic c, d;
    TrialStats base = run_trials(p, c, Algorithm::lrtdp, config(), 25);
    TrialStats moved = run_trials(p, d, Algorithm::lrtdp, other, 25);
    CHECK(base.failed == 0);
    CHECK(moved.failed == 0);
}

TEST_CASE("a run that exceeds the step cap fails") {
    GroundProblem p = support::make_chain(0.01);
    SolverConfig cfg = config();
    cfg.trial_cap = 1;
    ZeroHeuristic zero;
    TrialStats s = run_trials(p, zero, Algorithm::asp, cfg, 200);
    CHECK(s.failed > 150);
    CHECK(s.failed + s.successful == 200);
}

TEST_CASE("report formatting") {
    const string header = "problem\truns\tfailed\tsuccessful\ttime\tcost\n";
    CHECK(report({}) == header);

    TrialStats ladder;
    ladder.problem = "ladder";
    ladder.runs = 30;
    ladder.successful = 30;
    ladder.time_ms = 0.4;
    ladder.mean_cost = 2;
    CHECK(report({ladder}) == "problem\truns\tfailed\tsuccessful\ttime\tcost\n"
                              "ladder\t30\t0\t30\t0\t2.0\n");

    ladder.time_ms = 1234.6;
    ladder.mean_cost = 13.26;
    CHECK(report({ladder}).substr(header.size()) == "ladder\t30\t0\t30\t1235\t13.3\n");

    CHECK(report({unattempted("p7")}) == "problem\truns\tfailed\tsuccessful\ttime\tcost\n"
                                         "p7\t—\t—\t—\t—\t—\n");
}
