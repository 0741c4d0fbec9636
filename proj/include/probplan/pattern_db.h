#ifndef PROBPLAN_PATTERN_DB_H
#define PROBPLAN_PATTERN_DB_H

#include "det_problem.h"
#include "ground_problem.h"
#include "heuristic.h"
#include "state.h"

#include <cstddef>
#include <vector>

namespace probplan {
using AtomGroup = std::vector<AtomId>;

// Checks that exactly one member holds initially and that every outcome touching the group swaps one member for another.
bool is_exactly_one_group(const GroundProblem &p, const AtomGroup &group);

// The k largest disjoint verified groups, largest first. Throws NoPatternsFound.
std::vector<AtomGroup> detect_patterns(const GroundProblem &p, std::size_t k);

enum class PdbMode {max, additive};

/*
  One table per group. An abstract state is the single group member that
  holds, or "none" (index = group size) when no member holds.
*/
struct PatternDb {
    PdbMode mode = PdbMode::max;
    double dead_end_value = 1e6;
    std::vector<AtomGroup> groups;
    std::vector<std::vector<double>> tables;

    // Share of zero entries over all member states; the "none" states are excluded.
    double zero_fraction() const;
};

// Throws AdditivityViolation if additive mode is requested but an operator touches two groups.
PatternDb patterndb_build(const DetProblem &det, const std::vector<AtomGroup> &groups,
                          PdbMode mode, double dead_end_value);
double patterndb_eval(const PatternDb &db, const State &s);

class PatternDbHeuristic : public Heuristic {
    PatternDb db_;

protected:
    double compute(const State &s) override {return patterndb_eval(db_, s);}

public:
    PatternDbHeuristic(PatternDb db, std::size_t k) : db_(std::move(db)), k_(k) {}
    std::string name() const override {return "patterndb-" + std::to_string(k_);}
    const PatternDb &db() const {return db_;}

private:
    std::size_t k_;
};
}

#endif
