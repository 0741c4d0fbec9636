#ifndef PROBPLAN_CLI_H
#define PROBPLAN_CLI_H

#include "ground_problem.h"
#include "pattern_db.h"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace probplan {
enum ExitCode {exit_success = 0, exit_solver_failure = 1, exit_input_error = 2};

struct CliConfig {
    std::string algorithm = "lrtdp";
    std::string heuristic_spec = "patterndb-1";
    double epsilon = 1e-3;
    double weight = 5;
    double dead_end_value = 1e6;
    std::uint64_t seed = 20040601;
    std::size_t runs = 30;
    std::size_t trial_cap = 10000;
    std::size_t lookahead = 0;
    std::size_t hash_size_hint = 49999;
    int verbosity = 0;
    double budget_seconds = 0;
    bool fallback = true;
    std::string report_tsv;
    std::string domain_path;
    std::string problem_path;
};

// True when the pattern database carries too little information to guide lrtdp or hdp.
bool auto_fallback(const PatternDb &db, const GroundProblem &p);

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run_cli(const CliConfig &config, std::ostream &out, std::ostream &err);
}

#endif
