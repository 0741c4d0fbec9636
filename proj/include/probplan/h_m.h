#ifndef PROBPLAN_H_M_H
#define PROBPLAN_H_M_H

#include "det_problem.h"
#include "heuristic.h"
#include "state.h"

#include <vector>

namespace probplan {
/*
  Costs of reaching atom sets of size at most m from one state under the
  Strips relaxation, computed to a fixpoint. Negative preconditions are
  ignored, which keeps the estimate a lower bound.
*/
class HmTable {
    int m_;
    std::size_t n_;
    std::vector<double> cost_;

public:
    HmTable(int m, std::size_t atom_count);

    int m() const {return m_;}
    // For m = 1 only the diagonal (p, p) is meaningful.
    double pair(AtomId p, AtomId q) const {return cost_[p * n_ + q];}
    double atom(AtomId p) const {return pair(p, p);}
    double &at(AtomId p, AtomId q) {return cost_[p * n_ + q];}
    // Max over pairs of the set (over atoms for m = 1); infinity if some member is unreachable.
    double set_cost(const std::vector<AtomId> &atoms) const;
};

HmTable h_m_build(const DetProblem &det, const State &init, int m);
double h_m_eval(const HmTable &table, const std::vector<AtomId> &goal, double dead_end_value);

class HmHeuristic : public Heuristic {
    const DetProblem &det_;
    int m_;
    double dead_end_value_;

protected:
    double compute(const State &s) override;

public:
    HmHeuristic(const DetProblem &det, int m, double dead_end_value)
        : det_(det), m_(m), dead_end_value_(dead_end_value) {}
    std::string name() const override {return "h-m-" + std::to_string(m_);}
};
}

#endif
