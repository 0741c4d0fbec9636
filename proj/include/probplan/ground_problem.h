#ifndef PROBPLAN_GROUND_PROBLEM_H
#define PROBPLAN_GROUND_PROBLEM_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace probplan {
using AtomId = std::uint32_t;
using OpId = std::uint32_t;

class AtomTable {
    std::vector<std::string> names_;
    std::unordered_map<std::string, AtomId> ids_;

public:
    AtomId intern(const std::string &name);
    std::optional<AtomId> find(const std::string &name) const;
    const std::string &name(AtomId id) const {return names_[id];}
    std::size_t size() const {return names_.size();}
};

struct GroundOutcome {
    double probability = 1.0;
    std::vector<AtomId> add;
    std::vector<AtomId> del;
};

// Operator in canonical form: <prec, [p_1 : (add_1, del_1), ..., p_n : (add_n, del_n)]>.
struct GroundOperator {
    OpId id = 0;
    std::string name;
    std::vector<AtomId> pre_pos;
    std::vector<AtomId> pre_neg;
    double cost = 1.0;
    std::vector<GroundOutcome> outcomes;
};

struct GroundProblem {
    std::string name;
    std::string domain_name;
    AtomTable atoms;
    std::vector<GroundOperator> operators;
    std::vector<AtomId> init;
    std::vector<AtomId> goal_pos;
    std::vector<AtomId> goal_neg;

    std::size_t atom_count() const {return atoms.size();}
    std::size_t operator_count() const {return operators.size();}
};

/*
  Sorts atom lists, assigns operator ids by position and checks the
  canonical-form invariants (ids in range, add and del disjoint, nonempty
  outcome lists, probabilities summing to one within 1e-6). Throws
  ProbabilitySumError or InputError on violations.
*/
void finalize(GroundProblem &problem);
}

#endif
