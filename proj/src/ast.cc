#include "probplan/ast.h"

using namespace std;

namespace probplan {
string AtomExpr::str() const {
    string out = "(" + predicate;
    for (const string &arg : args)
        out += " " + arg;
    return out + ")";
}

Formula Formula::make_truth(bool value) {
    Formula f;
    f.kind = Kind::truth;
    f.value = value;
    return f;
}

Formula Formula::make_atom(AtomExpr atom) {
    Formula f;
    f.kind = Kind::atom;
    f.atom = std::move(atom);
    return f;
}

Formula Formula::make_equality(string lhs, string rhs) {
    Formula f;
    f.kind = Kind::equality;
    f.atom.predicate = "=";
    f.atom.args = {std::move(lhs), std::move(rhs)};
    return f;
}

Formula Formula::make_not(Formula inner) {
    Formula f;
    f.kind = Kind::negation;
    f.parts.push_back(std::move(inner));
    return f;
}

Formula Formula::make_and(vector<Formula> parts) {
    Formula f;
    f.kind = Kind::conjunction;
    f.parts = std::move(parts);
    return f;
}

Formula Formula::make_or(vector<Formula> parts) {
    Formula f;
    f.kind = Kind::disjunction;
    f.parts = std::move(parts);
    return f;
}

Formula Formula::make_forall(vector<TypedName> variables, Formula body) {
    Formula f;
    f.kind = Kind::universal;
    f.variables = std::move(variables);
    f.parts.push_back(std::move(body));
    return f;
}

Effect Effect::make_add(AtomExpr atom) {
    Effect e;
    e.kind = Kind::add;
    e.atom = std::move(atom);
    return e;
}

Effect Effect::make_del(AtomExpr atom) {
    Effect e;
    e.kind = Kind::del;
    e.atom = std::move(atom);
    return e;
}

Effect Effect::make_and(vector<Effect> parts) {
    Effect e;
    e.kind = Kind::conjunction;
    e.parts = std::move(parts);
    return e;
}

Effect Effect::make_when(Formula condition, Effect body) {
    Effect e;
    e.kind = Kind::conditional;
    e.condition = std::move(condition);
    e.parts.push_back(std::move(body));
    return e;
}

Effect Effect::make_forall(vector<TypedName> variables, Effect body) {
    Effect e;
    e.kind = Kind::universal;
    e.variables = std::move(variables);
    e.parts.push_back(std::move(body));
    return e;
}

Effect Effect::make_probabilistic(vector<pair<Rational, Effect>> branches) {
    Effect e;
    e.kind = Kind::probabilistic;
    for (auto &[p, body] : branches) {
        e.probabilities.push_back(p);
        e.parts.push_back(std::move(body));
    }
    return e;
}

Effect Effect::make_cost(Rational amount) {
    Effect e;
    e.kind = Kind::cost;
    e.amount = amount;
    return e;
}
}
