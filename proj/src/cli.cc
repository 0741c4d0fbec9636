#include "probplan/cli.h"

#include "probplan/bench.h"
#include "probplan/errors.h"
#include "probplan/grounding.h"
#include "probplan/heuristic_stack.h"
#include "probplan/parser.h"
#include "probplan/solver.h"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace std;

namespace probplan {
bool auto_fallback(const PatternDb &db, const GroundProblem &p) {
    State init = initial_state(p);
    if (!is_goal(p, init.view()) && patterndb_eval(db, init) == 0)
        return true;
    return db.zero_fraction() >= 0.9;
}

namespace {
string read_file(const string &path) {
    ifstream in(path, ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    ostringstream text;
    text << in.rdbuf();
    return text.str();
}

GroundProblem load(const CliConfig &config) {
    optional<DomainAst> domain;
    optional<ProblemAst> problem;
    for (const string &path : {config.domain_path, config.problem_path}) {
        ParsedTask task = parse(read_file(path), path);
        if (task.domain) {
            if (domain)
                throw InputError(path + ": a second domain definition was given");
            domain = std::move(task.domain);
        }
        if (task.problem) {
            if (problem)
                throw InputError(path + ": a second problem definition was given");
            problem = std::move(task.problem);
        }
    }
    if (!domain)
        throw InputError("no domain definition in the input files");
    if (!problem)
        throw InputError("no problem definition in the input files");
    return ground(*domain, *problem);
}

SolverConfig solver_config(const CliConfig &config, ostream &err) {
    SolverConfig cfg;
    cfg.epsilon = config.epsilon;
    cfg.weight = config.weight;
    cfg.dead_end_value = config.dead_end_value;
    cfg.seed = config.seed;
    cfg.trial_cap = config.trial_cap;
    cfg.lookahead = config.lookahead;
    if (config.verbosity >= 1) {
        cfg.progress = [&err](size_t iteration, double v0, double residual) {
            err << "iter=" << iteration << " v0=" << v0 << " residual=" << residual << '\n';
        };
    }
    cfg.validate();
    return cfg;
}

void emit(const CliConfig &config, const vector<TrialStats> &rows, ostream &out) {
    string table = report(rows);
    out << table;
    if (!config.report_tsv.empty()) {
        ofstream file(config.report_tsv, ios::binary);
        if (!file)
            throw InputError("cannot write '" + config.report_tsv + "'");
        file << table;
    }
}

TrialStats run_fallback(const GroundProblem &p, const CliConfig &config, SolverConfig cfg,
                        const string &reason, ostream &err) {
    err << "switching to asp with ff: " << reason << '\n';
    cfg.deadline.reset();
    cfg.budget_seconds = 0;
    StackOptions options;
    options.dead_end_value = cfg.dead_end_value;
    HeuristicStack stack(p, "ff", options);
    return run_trials(p, stack.top(), Algorithm::asp, cfg, config.runs, config.hash_size_hint);
}
}

int run_cli(const CliConfig &config, ostream &out, ostream &err) {
    optional<Algorithm> algorithm = parse_algorithm(config.algorithm);
    if (!algorithm) {
        err << "error: unknown algorithm '" << config.algorithm << "'\n";
        return exit_input_error;
    }
    try {
        parse_stack_spec(config.heuristic_spec);
        if (config.runs < 1)
            throw InputError("at least one run is required");
        SolverConfig cfg = solver_config(config, err);

        GroundProblem p = load(config);
        if (config.verbosity >= 1)
            err << "grounded " << p.atom_count() << " atoms, " << p.operator_count()
                << " operators\n";

        auto clock_start = chrono::steady_clock::now();
        if (config.budget_seconds > 0)
            cfg.deadline = clock_start + chrono::duration_cast<chrono::steady_clock::duration>(
                chrono::duration<double>(config.budget_seconds));

        StackOptions options;
        options.dead_end_value = cfg.dead_end_value;
        unique_ptr<HeuristicStack> stack;
        try {
            stack = parse_stack(p, config.heuristic_spec, options);
        } catch (const NoPatternsFound &e) {
            if (!config.fallback || *algorithm == Algorithm::asp) {
                err << "error: " << e.what() << '\n';
                return exit_solver_failure;
            }
            emit(config, {run_fallback(p, config, cfg, e.what(), err)}, out);
            return exit_success;
        }
        if (stack->additivity_downgraded() && config.verbosity >= 1)
            err << "pattern groups are not additive; using their maximum\n";

        bool offline = *algorithm != Algorithm::asp;
        if (offline && config.fallback && stack->pattern_db() &&
            auto_fallback(*stack->pattern_db(), p)) {
            emit(config, {run_fallback(p, config, cfg, "pattern database is uninformative", err)}, out);
            return exit_success;
        }

        TrialStats stats;
        try {
            stats = run_trials(p, stack->top(), *algorithm, cfg, config.runs, config.hash_size_hint);
        } catch (const SolverFailure &e) {
            if (!offline || !config.fallback) {
                err << "error: " << e.what() << '\n';
                emit(config, {unattempted(p.name)}, out);
                return exit_solver_failure;
            }
            stats = run_fallback(p, config, cfg, e.what(), err);
        }
        emit(config, {stats}, out);
        return exit_success;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const OutOfMemory &e) {
        err << "error: " << e.what() << '\n';
        return exit_solver_failure;
    } catch (const PlannerError &e) {
        err << "error: " << e.what() << '\n';
        return exit_solver_failure;
    }
}

int run_cli(int argc, const char *const *argv, ostream &out, ostream &err) {
    CliConfig config;
    CLI::App app{"Probabilistic planner for goal-based PPDDL problems", "probplan"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.add_option("-a", config.algorithm, "Algorithm: vi, lrtdp, hdp or asp")->capture_default_str();
    app.add_option("-h", config.heuristic_spec, "Heuristic stack, e.g. \"h-m-1|min-min-lrtdp\"")
        ->capture_default_str();
    app.add_option("-e", config.epsilon, "Consistency threshold epsilon")->capture_default_str();
    app.add_option("-w", config.weight, "Weight on the heuristic")->capture_default_str();
    app.add_option("-d", config.dead_end_value, "Value of dead-end states")->capture_default_str();
    app.add_option("-s", config.seed, "Random seed")->capture_default_str();
    app.add_option("-n", config.runs, "Number of evaluation runs")->capture_default_str();
    app.add_option("-c", config.trial_cap, "Step cap per trial and per run")->capture_default_str();
    app.add_option("-l", config.lookahead, "Lookahead depth for asp")->capture_default_str();
    app.add_option("-z", config.hash_size_hint, "Initial hash table size")->capture_default_str();
    app.add_option("-v", config.verbosity, "Verbosity level 0-2")->capture_default_str()
        ->check(CLI::Range(0, 2));
    app.add_option("--budget", config.budget_seconds, "Wall-clock solve budget in seconds");
    app.add_flag("--no-fallback", [&config](int64_t) {config.fallback = false;},
                 "Never switch to asp with ff");
    app.add_option("--report-tsv", config.report_tsv, "Also write the report to this file");
    app.add_option("domain", config.domain_path, "Domain file")->required();
    app.add_option("problem", config.problem_path, "Problem file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_success;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_input_error;
    }
    return run_cli(config, out, err);
}
}
