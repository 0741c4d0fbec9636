#ifndef PROBPLAN_GROUNDING_H
#define PROBPLAN_GROUNDING_H

#include "ast.h"
#include "ground_problem.h"
#include "normalize.h"

#include <cstddef>
#include <string>
#include <vector>

namespace probplan {
struct GroundingOptions {
    NormalizeOptions normalize;
    // Drop operators whose positive preconditions are unreachable under the delete relaxation.
    bool prune = true;
};

struct SchemaGroundingStats {
    std::string name;
    std::size_t split_copies = 0;
    std::size_t instantiations = 0;
    std::size_t operators_before_prune = 0;
    std::size_t operators_after_prune = 0;
};

struct GroundingReport {
    std::vector<SchemaGroundingStats> schemas;
    std::size_t operators_before_prune = 0;
    std::size_t operators_after_prune = 0;
};

GroundProblem ground(const DomainAst &domain, const ProblemAst &problem,
                     const GroundingOptions &options = {}, GroundingReport *report = nullptr);
}

#endif
