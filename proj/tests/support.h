#ifndef PROBPLAN_TESTS_SUPPORT_H
#define PROBPLAN_TESTS_SUPPORT_H

#include "probplan/ground_problem.h"
#include "probplan/state.h"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace support {
using probplan::AtomId;
using probplan::GroundProblem;
using AtomSet = std::vector<AtomId>;

std::string fixture(const std::string &name);
std::string read_text(const std::string &path);
GroundProblem ground_text(const std::string &domain, const std::string &problem);
GroundProblem ground_files(const std::string &domain_file, const std::string &problem_file);

// The desk fixtures, built directly in ground form.
GroundProblem make_chain(double p);
GroundProblem make_ladder();
GroundProblem make_twoway();
GroundProblem make_dead();
// Two independent two-valued variables x and y, each needing one move to reach its goal value.
// With coupled set, an extra operator moves both at once.
GroundProblem make_two_groups(bool coupled);

struct RandomSpec {
    std::size_t max_atoms = 8;
    std::size_t max_operators = 12;
    std::size_t max_outcomes = 3;
    bool delete_free = false;
};

GroundProblem random_problem(std::mt19937_64 &rng, const RandomSpec &spec = {});

// Brute-force references, written against plain atom sets rather than the library's state machinery.
AtomSet successor(const AtomSet &s, const probplan::GroundOutcome &outcome);
bool holds(const GroundProblem &p, const AtomSet &s, const probplan::GroundOperator &op);
bool goal_holds(const GroundProblem &p, const AtomSet &s);
std::vector<AtomSet> reachable_states(const GroundProblem &p);

// Optimal expected cost by Jacobi value iteration to 1e-11, dead ends fixed at D.
std::map<AtomSet, double> optimal_values(const GroundProblem &p, double dead_end_value);
// Optimal cost when the planner may pick each action's outcome.
std::map<AtomSet, double> min_min_values(const GroundProblem &p, double dead_end_value);
// Fewest actions reaching the goal ignoring deletes and negative preconditions, with each
// outcome usable as its own action; -1 when impossible.
int delete_free_optimum(const GroundProblem &p, const AtomSet &s);

probplan::State to_state(const GroundProblem &p, const AtomSet &s);
AtomSet to_atoms(const probplan::State &s);
}

#endif
