#ifndef PROBPLAN_HEURISTIC_STACK_H
#define PROBPLAN_HEURISTIC_STACK_H

#include "det_problem.h"
#include "ground_problem.h"
#include "heuristic.h"
#include "pattern_db.h"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace probplan {
enum class LayerKind {zero, ff, h_m, patterndb, min_min_ida, min_min_lrtdp};

struct LayerSpec {
    LayerKind kind;
    // m for h-m, k for patterndb.
    std::size_t parameter = 0;
    std::string text;
};

// Grammar check only, so it can run before any input file is read.
std::vector<LayerSpec> parse_stack_spec(const std::string &spec);

struct StackOptions {
    double dead_end_value = 1e6;
    std::size_t search_budget = 10000000;
    // Pattern databases are built additive and downgraded to max on an additivity violation.
    bool prefer_additive = true;
};

/*
  Heuristics composed left to right: every min-min layer searches with the
  layer to its left as its estimate. The top (rightmost) layer is the one
  handed to the solver.
*/
class HeuristicStack {
    std::unique_ptr<DetProblem> det_;
    std::vector<std::unique_ptr<Heuristic>> layers_;
    // Base for a search layer written first, as in "min-min-ida*" alone.
    std::unique_ptr<Heuristic> implicit_base_;
    std::vector<LayerSpec> specs_;
    const PatternDb *pattern_db_ = nullptr;
    bool downgraded_ = false;

public:
    HeuristicStack(const GroundProblem &p, const std::string &spec, const StackOptions &options = {});

    Heuristic &top() {return *layers_.back();}
    Heuristic &layer(std::size_t i) {return *layers_[i];}
    std::size_t size() const {return layers_.size();}
    const std::vector<LayerSpec> &specs() const {return specs_;}
    const DetProblem &det() const {return *det_;}
    // The first pattern-database layer, if any.
    const PatternDb *pattern_db() const {return pattern_db_;}
    bool additivity_downgraded() const {return downgraded_;}
    double value(const State &s) {return top().value(s);}
};

std::unique_ptr<HeuristicStack> parse_stack(const GroundProblem &p, const std::string &spec,
                                            const StackOptions &options = {});
}

#endif
