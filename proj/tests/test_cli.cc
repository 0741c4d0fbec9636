#include "doctest.h"

#include "support.h"

#include "probplan/cli.h"
#include "probplan/det_problem.h"
#include "probplan/heuristic_stack.h"
#include "probplan/pattern_db.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace std;
using namespace probplan;

namespace {
struct Run {
    int code;
    string out;
    string err;
};

Run run(vector<string> args) {
    vector<const char *> argv{"probplan"};
    for (const string &a : args)
        argv.push_back(a.c_str());
    ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

string fx(const string &name) {
    return support::fixture(name);
}

string rows(const string &report) {
    return report.substr(report.find('\n') + 1);
}

string temp_file(const string &name, const string &text) {
    filesystem::path path = filesystem::temp_directory_path() / ("probplan-test-" + name);
    ofstream(path) << text;
    return path.string();
}
}

TEST_CASE("the h-m-1 ladder invocation reports cost 2.0") {
    Run r = run({"-a", "lrtdp", "-h", "h-m-1", "-e", ".001", fx("ladder-domain.pddl"), fx("ladder-problem.pddl")});
    CHECK(r.code == exit_success);
    CHECK(r.out.rfind("problem\truns\tfailed\tsuccessful\ttime\tcost\n", 0) == 0);
    string row = rows(r.out);
    CHECK(row.rfind("ladder\t30\t0\t30\t", 0) == 0);
    CHECK(row.substr(row.rfind('\t')) == "\t2.0\n");
}

TEST_CASE("asp with ff runs online on CHAIN") {
    Run r = run({"-a", "asp", "-h", "ff", fx("chain-domain.pddl"), fx("chain-problem.pddl")});
    CHECK(r.code == exit_success);
    CHECK(rows(r.out).rfind("chain\t30\t0\t30\t", 0) == 0);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run({"-h", "ff|min-min-ida*", fx("ladder-domain.pddl"), fx("ladder-problem.pddl")}).code == exit_input_error);
    CHECK(run({"-h", "h-m-7", fx("ladder-domain.pddl"), fx("ladder-problem.pddl")}).code == exit_input_error);
    CHECK(run({"--frobnicate", fx("ladder-domain.pddl"), fx("ladder-problem.pddl")}).code == exit_input_error);
    CHECK(run({fx("ladder-domain.pddl")}).code == exit_input_error);
    CHECK(run({"-v", "3", fx("ladder-domain.pddl"), fx("ladder-problem.pddl")}).code == exit_input_error);
    CHECK(run({fx("ladder-domain.pddl"), "/nonexistent/problem.pddl"}).code == exit_input_error);
    string broken = temp_file("broken.pddl", "(define (domain ladder) (:predicates (a)");
    Run syntax = run({broken, fx("ladder-problem.pddl")});
    CHECK(syntax.code == exit_input_error);
    CHECK(syntax.err.find("broken.pddl") != string::npos);
    string metric = temp_file("metric.pddl",
        "(define (problem ladder) (:domain ladder) (:init (a)) (:goal (g)) (:metric maximize (reward)))");
    CHECK(run({fx("ladder-domain.pddl"), metric}).code == exit_input_error);
}

TEST_CASE("algorithm and heuristic names are checked before any file is read") {
    Run a = run({"-a", "rtdp", "/nonexistent/d.pddl", "/nonexistent/p.pddl"});
    CHECK(a.code == exit_input_error);
    CHECK(a.err.find("rtdp") != string::npos);
    CHECK(a.err.find("nonexistent") == string::npos);
    Run h = run({"-h", "ff|h-m-1", "/nonexistent/d.pddl", "/nonexistent/p.pddl"});
    CHECK(h.code == exit_input_error);
    CHECK(h.err.find("nonexistent") == string::npos);
}

TEST_CASE("a blown budget without fallback exits 1 with a dash row") {
    Run r = run({"--budget", "0.000001", "--no-fallback", "-a", "vi", "-h", "zero",
                 fx("blocksworld-domain.pddl"), fx("blocksworld-8.pddl")});
    CHECK(r.code == exit_solver_failure);
    CHECK(rows(r.out) == "blocksworld-8\t—\t—\t—\t—\t—\n");
}

TEST_CASE("the report file receives the same bytes as standard output") {
    string path = (filesystem::temp_directory_path() / "probplan-test-report.tsv").string();
    Run r = run({"--report-tsv", path, "-a", "hdp", "-h", "zero",
                 fx("ladder-domain.pddl"), fx("ladder-problem.pddl")});
    CHECK(r.code == exit_success);
    CHECK(support::read_text(path) == r.out);
}

TEST_CASE("verbosity 1 prints convergence lines") {
    Run r = run({"-v", "1", "-a", "lrtdp", "-h", "zero", fx("chain-domain.pddl"), fx("chain-problem.pddl")});
    CHECK(r.code == exit_success);
    CHECK(r.err.find("iter=1 v0=") != string::npos);
    CHECK(r.err.find("residual=") != string::npos);
    CHECK(r.out.find("iter=") == string::npos);
}

TEST_CASE("the default configuration solves blocksworld-5") {
    Run r = run({fx("blocksworld-domain.pddl"), fx("blocksworld-5.pddl")});
    CHECK(r.code == exit_success);
    CHECK(r.err.find("switching") == string::npos);
    CHECK(rows(r.out).rfind("blocksworld-5\t30\t0\t30\t", 0) == 0);
}

TEST_CASE("auto_fallback decisions") {
    GroundProblem chain = support::make_chain(0.5);
    DetProblem dc = make_strips(chain);
    PatternDb informative = patterndb_build(dc, detect_patterns(chain, 1), PdbMode::max, 1e6);
    CHECK_FALSE(auto_fallback(informative, chain));

    PatternDb flat = informative;
    for (auto &table : flat.tables)
        fill(table.begin(), table.end(), 0.0);
    CHECK(auto_fallback(flat, chain));

    GroundProblem coupled = support::make_two_groups(true);
    auto stack = parse_stack(coupled, "patterndb-2");
    REQUIRE(stack->additivity_downgraded());
    CHECK_FALSE(auto_fallback(*stack->pattern_db(), coupled));
}

TEST_CASE("an uninformative pattern database switches to asp with ff") {
    // The only exactly-one group is the untouched (y0, y1) variable.
    string domain = temp_file("flat-domain.pddl", R"(
(define (domain flat)
  (:predicates (x) (y0) (y1) (g))
  (:action finish :precondition (x) :effect (g))
  (:action reach :effect (x))
  (:action flip :precondition (y0) :effect (and (y1) (not (y0)))))
)");
    string problem = temp_file("flat-problem.pddl",
                               "(define (problem flat) (:domain flat) (:init (y0)) (:goal (g)))");
    Run r = run({"-a", "lrtdp", "-h", "patterndb-1", domain, problem});
    CHECK(r.code == exit_success);
    CHECK(r.err.find("switching to asp with ff") != string::npos);
    CHECK(rows(r.out).rfind("flat\t30\t0\t30\t", 0) == 0);
}
