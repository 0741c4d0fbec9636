#ifndef PROBPLAN_AST_H
#define PROBPLAN_AST_H

#include "errors.h"
#include "rational.h"

#include <compare>
#include <string>
#include <vector>

namespace probplan {
inline bool is_variable(const std::string &term) {
    return !term.empty() && term.front() == '?';
}

// Predicate applied to terms; a term is a variable ("?x") or an object name.
struct AtomExpr {
    std::string predicate;
    std::vector<std::string> args;

    auto operator<=>(const AtomExpr &) const = default;
    std::string str() const;
};

struct TypedName {
    std::string name;
    std::string type = "object";
};

struct Formula {
    enum class Kind {truth, atom, equality, negation, conjunction, disjunction, universal};

    Kind kind = Kind::truth;
    bool value = true;                 // truth
    AtomExpr atom;                     // atom; equality keeps its two terms in atom.args
    std::vector<TypedName> variables;  // universal
    std::vector<Formula> parts;        // negation: 1, universal: 1
    SourceLocation location;

    static Formula make_truth(bool value);
    static Formula make_atom(AtomExpr atom);
    static Formula make_equality(std::string lhs, std::string rhs);
    static Formula make_not(Formula f);
    static Formula make_and(std::vector<Formula> parts);
    static Formula make_or(std::vector<Formula> parts);
    static Formula make_forall(std::vector<TypedName> variables, Formula body);
};

struct Effect {
    enum class Kind {conjunction, add, del, conditional, universal, probabilistic, cost};

    Kind kind = Kind::conjunction;
    AtomExpr atom;                       // add / del
    Formula condition;                   // conditional
    std::vector<TypedName> variables;    // universal
    std::vector<Effect> parts;           // conditional/universal: 1 body; probabilistic: branches
    std::vector<Rational> probabilities; // probabilistic, parallel to parts
    Rational amount;                     // cost
    SourceLocation location;

    static Effect make_add(AtomExpr atom);
    static Effect make_del(AtomExpr atom);
    static Effect make_and(std::vector<Effect> parts);
    static Effect make_when(Formula condition, Effect body);
    static Effect make_forall(std::vector<TypedName> variables, Effect body);
    static Effect make_probabilistic(std::vector<std::pair<Rational, Effect>> branches);
    static Effect make_cost(Rational amount);
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> parameters;
    Formula precondition;
    Effect effect;
    SourceLocation location;
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> parameters;
};

struct DomainAst {
    std::string name;
    std::vector<std::string> requirements;
    // (type, parent) pairs in declaration order; "object" is implicit.
    std::vector<std::pair<std::string, std::string>> types;
    std::vector<TypedName> constants;
    std::vector<PredicateDecl> predicates;
    std::vector<ActionSchema> schemas;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<AtomExpr> init;
    Formula goal;
    SourceLocation goal_location;
};
}

#endif
