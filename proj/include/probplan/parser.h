#ifndef PROBPLAN_PARSER_H
#define PROBPLAN_PARSER_H

#include "ast.h"

#include <optional>
#include <string>
#include <string_view>

namespace probplan {
/*
  Reader for the supported PPDDL subset: typing, equality, negative,
  disjunctive and universal preconditions, conditional and probabilistic
  effects, and (decrease (reward) k) as the action cost. Anything else
  that is recognizably PDDL (fluents, metrics, goal rewards, derived
  predicates, existentials) raises UnsupportedConstruct.
*/
struct ParsedTask {
    std::optional<DomainAst> domain;
    std::optional<ProblemAst> problem;
};

// Accepts any number of (define ...) blocks; at most one domain and one problem.
ParsedTask parse(std::string_view text, const std::string &file = "<input>");

DomainAst parse_domain(std::string_view text, const std::string &file = "<domain>");
ProblemAst parse_problem(std::string_view text, const std::string &file = "<problem>");
}

#endif
