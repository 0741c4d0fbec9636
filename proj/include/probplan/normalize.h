#ifndef PROBPLAN_NORMALIZE_H
#define PROBPLAN_NORMALIZE_H

#include "ast.h"
#include "rational.h"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace probplan {
// Objects by type, subtypes included. Constants come first, then problem objects.
class ObjectTable {
    std::vector<std::string> objects_;
    std::map<std::string, std::string> object_types_;
    std::map<std::string, std::string> parent_;
    std::map<std::string, std::vector<std::string>> by_type_;

public:
    ObjectTable() = default;
    ObjectTable(const DomainAst &domain, const ProblemAst *problem);

    bool is_subtype(const std::string &type, const std::string &ancestor) const;
    const std::vector<std::string> &objects_of(const std::string &type) const;
    const std::vector<std::string> &all() const {return objects_;}
    bool contains(const std::string &object) const {return object_types_.count(object) > 0;}
};

// Equality literals use the predicate "=".
struct Literal {
    AtomExpr atom;
    bool positive = true;

    auto operator<=>(const Literal &) const = default;
    std::string str() const;
};

struct FlatOutcome {
    Rational probability;
    std::vector<AtomExpr> add;
    std::vector<AtomExpr> del;
};

/*
  One operator schema in canonical form: a conjunction of literals as the
  precondition and a single flat distribution over (add, del) pairs.
  Probabilities are exact and sum to one; a no-op outcome is an outcome
  with empty add and del lists.
*/
struct FlatSchema {
    std::string name;
    std::vector<TypedName> parameters;
    std::vector<Literal> precondition;
    Rational cost{1};
    std::vector<FlatOutcome> outcomes;
    std::size_t split_index = 0;
};

struct NormalizeOptions {
    std::size_t split_cap = 10000;
};

/*
  Removes quantifiers (expanded over the object table), disjunctive
  preconditions and conditional effects, and multiplies nested
  probabilistic effects into one distribution. Conditions are compiled by
  splitting on their truth value, so the output copies have mutually
  exclusive preconditions: in any state at most one copy applies, and it
  induces the same successor distribution as the original schema.

  Throws BlowupLimitExceeded once more than options.split_cap copies (or
  intermediate cases) would be needed.
*/
std::vector<FlatSchema> normalize(const ActionSchema &schema, const ObjectTable &objects,
                                  const NormalizeOptions &options = {});
}

#endif
