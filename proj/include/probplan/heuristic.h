#ifndef PROBPLAN_HEURISTIC_H
#define PROBPLAN_HEURISTIC_H

#include "state.h"

#include <string>
#include <unordered_map>

namespace probplan {
/*
  Cost-to-go estimate. Values are memoized per state content, so two
  evaluations of one state always agree and expensive layers (per-state
  h^m tables, min-min searches) run at most once per state.
*/
class Heuristic {
    std::unordered_map<State, double> memo_;

protected:
    virtual double compute(const State &s) = 0;

public:
    virtual ~Heuristic() = default;

    double value(const State &s);
    virtual std::string name() const = 0;
    virtual bool admissible() const {return true;}
    std::size_t cached() const {return memo_.size();}
};

class ZeroHeuristic : public Heuristic {
protected:
    double compute(const State &) override {return 0;}

public:
    std::string name() const override {return "zero";}
};
}

#endif
