#include "probplan/normalize.h"

#include "probplan/errors.h"

#include <algorithm>
#include <functional>
#include <optional>

using namespace std;

namespace probplan {
ObjectTable::ObjectTable(const DomainAst &domain, const ProblemAst *problem) {
    for (const auto &[type, parent] : domain.types)
        if (type != "object")
            parent_[type] = parent;
    auto add = [&](const TypedName &obj) {
        if (object_types_.count(obj.name))
            return;
        objects_.push_back(obj.name);
        object_types_[obj.name] = obj.type;
    };
    for (const TypedName &c : domain.constants)
        add(c);
    if (problem)
        for (const TypedName &o : problem->objects)
            add(o);
    for (const string &obj : objects_) {
        // Walk the ancestor chain; guard against cyclic declarations.
        string type = object_types_[obj];
        for (size_t steps = 0; steps <= parent_.size() + 1; ++steps) {
            by_type_[type].push_back(obj);
            if (type == "object")
                break;
            auto it = parent_.find(type);
            type = it == parent_.end() ? "object" : it->second;
        }
    }
}

bool ObjectTable::is_subtype(const string &type, const string &ancestor) const {
    string t = type;
    for (size_t steps = 0; steps <= parent_.size() + 1; ++steps) {
        if (t == ancestor)
            return true;
        if (t == "object")
            return false;
        auto it = parent_.find(t);
        t = it == parent_.end() ? "object" : it->second;
    }
    return false;
}

const vector<string> &ObjectTable::objects_of(const string &type) const {
    static const vector<string> none;
    auto it = by_type_.find(type);
    return it == by_type_.end() ? none : it->second;
}

string Literal::str() const {
    return positive ? atom.str() : "(not " + atom.str() + ")";
}

namespace {
using Bindings = map<string, string>;
// Literal code: 2 * atom index + (negated ? 1 : 0).
using Case = vector<int>;

struct OutcomeKey {
    vector<int> add;
    vector<int> del;
    auto operator<=>(const OutcomeKey &) const = default;
};

using Distribution = map<OutcomeKey, Rational>;

struct Branch {
    Case condition;
    Distribution distribution;
};

Distribution identity_distribution() {
    return {{OutcomeKey{}, Rational(1)}};
}

void sort_unique(vector<int> &v) {
    sort(v.begin(), v.end());
    v.erase(unique(v.begin(), v.end()), v.end());
}

optional<Case> conjoin(const Case &a, const Case &b) {
    Case merged;
    merged.reserve(a.size() + b.size());
    merge(a.begin(), a.end(), b.begin(), b.end(), back_inserter(merged));
    merged.erase(unique(merged.begin(), merged.end()), merged.end());
    for (size_t i = 1; i < merged.size(); ++i)
        if ((merged[i] >> 1) == (merged[i - 1] >> 1))
            return nullopt;
    return merged;
}

OutcomeKey combine(const OutcomeKey &a, const OutcomeKey &b) {
    OutcomeKey key;
    key.add = a.add;
    key.add.insert(key.add.end(), b.add.begin(), b.add.end());
    sort_unique(key.add);
    vector<int> del = a.del;
    del.insert(del.end(), b.del.begin(), b.del.end());
    sort_unique(del);
    // Deletes are applied before adds.
    set_difference(del.begin(), del.end(), key.add.begin(), key.add.end(),
                   back_inserter(key.del));
    return key;
}

Distribution convolve(const Distribution &a, const Distribution &b) {
    Distribution result;
    for (const auto &[ka, pa] : a)
        for (const auto &[kb, pb] : b)
            result[combine(ka, kb)] += pa * pb;
    return result;
}

class Normalizer {
    const ActionSchema &schema;
    const ObjectTable &objects;
    size_t cap;
    vector<AtomExpr> atoms;
    map<AtomExpr, int> atom_index;
    Rational cost{0};
    bool has_cost = false;

    void check_size(size_t n) const {
        if (n > cap)
            throw BlowupLimitExceeded(schema.name, cap);
    }

    int intern(const AtomExpr &atom) {
        auto [it, inserted] = atom_index.try_emplace(atom, static_cast<int>(atoms.size()));
        if (inserted)
            atoms.push_back(atom);
        return it->second;
    }

    AtomExpr bind(const AtomExpr &atom, const Bindings &bindings) const {
        AtomExpr bound = atom;
        for (string &arg : bound.args) {
            auto it = bindings.find(arg);
            if (it != bindings.end())
                arg = it->second;
        }
        return bound;
    }

    // Enumerates all object tuples for the given typed variables.
    void for_each_binding(const vector<TypedName> &vars, const Bindings &base,
                          const function<void(const Bindings &)> &visit) const {
        Bindings bindings = base;
        function<void(size_t)> rec = [&](size_t i) {
            if (i == vars.size()) {
                visit(bindings);
                return;
            }
            for (const string &obj : objects.objects_of(vars[i].type)) {
                bindings[vars[i].name] = obj;
                rec(i + 1);
            }
        };
        rec(0);
    }

    vector<Case> product(const vector<Case> &a, const vector<Case> &b) const {
        vector<Case> result;
        for (const Case &x : a) {
            for (const Case &y : b) {
                if (auto c = conjoin(x, y)) {
                    result.push_back(std::move(*c));
                    check_size(result.size());
                }
            }
        }
        return result;
    }

    vector<Case> literal_cases(const AtomExpr &atom, bool positive) {
        return {Case{2 * intern(atom) + (positive ? 0 : 1)}};
    }

    vector<Case> equality_cases(const AtomExpr &eq, bool positive) {
        const string &lhs = eq.args[0];
        const string &rhs = eq.args[1];
        if (lhs == rhs)
            return positive ? vector<Case>{Case{}} : vector<Case>{};
        if (!is_variable(lhs) && !is_variable(rhs))
            return positive ? vector<Case>{} : vector<Case>{Case{}};
        AtomExpr canonical = eq;
        if (canonical.args[1] < canonical.args[0])
            swap(canonical.args[0], canonical.args[1]);
        return literal_cases(canonical, positive);
    }

    vector<Case> all_of(const vector<function<vector<Case>()>> &parts) {
        vector<Case> acc{Case{}};
        for (const auto &part : parts) {
            acc = product(acc, part());
            if (acc.empty())
                break;
        }
        return acc;
    }

    // Mutually exclusive split: disjunct i is taken only when disjuncts 0..i-1 fail.
    vector<Case> any_of(const vector<pair<function<vector<Case>()>, function<vector<Case>()>>> &parts) {
        vector<Case> result;
        vector<Case> remaining{Case{}};
        for (const auto &[holds, fails] : parts) {
            if (remaining.empty())
                break;
            for (Case &c : product(remaining, holds()))
                result.push_back(std::move(c));
            check_size(result.size());
            remaining = product(remaining, fails());
        }
        return result;
    }

public:
    Normalizer(const ActionSchema &schema, const ObjectTable &objects, size_t cap)
        : schema(schema), objects(objects), cap(cap) {}

    vector<Case> cases(const Formula &f, bool positive, const Bindings &bindings) {
        using K = Formula::Kind;
        switch (f.kind) {
        case K::truth:
            return f.value == positive ? vector<Case>{Case{}} : vector<Case>{};
        case K::atom:
            return literal_cases(bind(f.atom, bindings), positive);
        case K::equality:
            return equality_cases(bind(f.atom, bindings), positive);
        case K::negation:
            return cases(f.parts[0], !positive, bindings);
        case K::conjunction:
        case K::disjunction: {
            bool conjunctive = (f.kind == K::conjunction) == positive;
            if (conjunctive) {
                vector<function<vector<Case>()>> parts;
                for (const Formula &part : f.parts)
                    parts.push_back([&, &part = part, positive] {return cases(part, positive, bindings);});
                return all_of(parts);
            }
            vector<pair<function<vector<Case>()>, function<vector<Case>()>>> parts;
            for (const Formula &part : f.parts)
                parts.emplace_back([&, &part = part, positive] {return cases(part, positive, bindings);},
                                   [&, &part = part, positive] {return cases(part, !positive, bindings);});
            return any_of(parts);
        }
        case K::universal: {
            vector<Bindings> instances;
            for_each_binding(f.variables, bindings,
                             [&](const Bindings &b) {instances.push_back(b);});
            const Formula &body = f.parts[0];
            if (positive) {
                vector<function<vector<Case>()>> parts;
                for (const Bindings &b : instances)
                    parts.push_back([&, &b = b] {return cases(body, true, b);});
                return all_of(parts);
            }
            vector<pair<function<vector<Case>()>, function<vector<Case>()>>> parts;
            for (const Bindings &b : instances)
                parts.emplace_back([&, &b = b] {return cases(body, false, b);},
                                   [&, &b = b] {return cases(body, true, b);});
            return any_of(parts);
        }
        }
        return {};
    }

    vector<Branch> combine_all(const vector<Branch> &a, const vector<Branch> &b) const {
        vector<Branch> result;
        for (const Branch &x : a) {
            for (const Branch &y : b) {
                if (auto c = conjoin(x.condition, y.condition)) {
                    result.push_back({std::move(*c), convolve(x.distribution, y.distribution)});
                    check_size(result.size());
                }
            }
        }
        return result;
    }

    vector<Branch> effect(const Effect &e, const Bindings &bindings, bool nested) {
        using K = Effect::Kind;
        switch (e.kind) {
        case K::add:
        case K::del: {
            OutcomeKey key;
            int atom = intern(bind(e.atom, bindings));
            (e.kind == K::add ? key.add : key.del).push_back(atom);
            return {Branch{{}, {{key, Rational(1)}}}};
        }
        case K::cost:
            if (nested)
                throw UnsupportedConstruct(e.location, "(decrease (reward) k) inside "
                                           "a conditional or probabilistic effect");
            if (e.amount < Rational(0))
                throw UnsupportedConstruct(e.location, "negative action cost");
            cost += e.amount;
            has_cost = true;
            return {Branch{{}, identity_distribution()}};
        case K::conjunction: {
            vector<Branch> acc{Branch{{}, identity_distribution()}};
            for (const Effect &part : e.parts)
                acc = combine_all(acc, effect(part, bindings, nested));
            return acc;
        }
        case K::universal: {
            vector<Branch> acc{Branch{{}, identity_distribution()}};
            vector<Bindings> instances;
            for_each_binding(e.variables, bindings,
                             [&](const Bindings &b) {instances.push_back(b);});
            for (const Bindings &b : instances)
                acc = combine_all(acc, effect(e.parts[0], b, nested));
            return acc;
        }
        case K::conditional: {
            vector<Branch> result;
            vector<Branch> body = effect(e.parts[0], bindings, true);
            for (const Case &c : cases(e.condition, true, bindings)) {
                for (const Branch &b : body) {
                    if (auto merged = conjoin(c, b.condition)) {
                        result.push_back({std::move(*merged), b.distribution});
                        check_size(result.size());
                    }
                }
            }
            for (Case &c : cases(e.condition, false, bindings)) {
                result.push_back({std::move(c), identity_distribution()});
                check_size(result.size());
            }
            return result;
        }
        case K::probabilistic: {
            Rational residual(1);
            for (const Rational &p : e.probabilities)
                residual -= p;
            Distribution start;
            if (residual > Rational(0))
                start[OutcomeKey{}] = residual;
            vector<Branch> acc{Branch{{}, start}};
            for (size_t i = 0; i < e.parts.size(); ++i) {
                vector<Branch> branch = effect(e.parts[i], bindings, true);
                vector<Branch> next;
                for (const Branch &x : acc) {
                    for (const Branch &y : branch) {
                        auto c = conjoin(x.condition, y.condition);
                        if (!c)
                            continue;
                        Distribution d = x.distribution;
                        for (const auto &[key, p] : y.distribution)
                            d[key] += e.probabilities[i] * p;
                        next.push_back({std::move(*c), std::move(d)});
                        check_size(next.size());
                    }
                }
                acc = std::move(next);
            }
            return acc;
        }
        }
        return {};
    }

    Literal decode_literal(int code) const {
        return Literal{atoms[code >> 1], (code & 1) == 0};
    }

    vector<AtomExpr> decode_atoms(const vector<int> &ids) const {
        vector<AtomExpr> result;
        for (int id : ids)
            result.push_back(atoms[id]);
        sort(result.begin(), result.end());
        return result;
    }

    vector<FlatSchema> run() {
        Bindings none;
        vector<Case> pre = cases(schema.precondition, true, none);
        vector<Branch> branches = effect(schema.effect, none, false);
        vector<FlatSchema> result;
        for (const Case &p : pre) {
            for (const Branch &b : branches) {
                auto c = conjoin(p, b.condition);
                if (!c)
                    continue;
                check_size(result.size() + 1);
                FlatSchema flat;
                flat.name = schema.name;
                flat.parameters = schema.parameters;
                flat.cost = has_cost ? cost : Rational(1);
                flat.split_index = result.size();
                for (int code : *c)
                    flat.precondition.push_back(decode_literal(code));
                sort(flat.precondition.begin(), flat.precondition.end());
                for (const auto &[key, prob] : b.distribution) {
                    if (prob == Rational(0))
                        continue;
                    flat.outcomes.push_back({prob, decode_atoms(key.add), decode_atoms(key.del)});
                }
                result.push_back(std::move(flat));
            }
        }
        return result;
    }
};
}

vector<FlatSchema> normalize(const ActionSchema &schema, const ObjectTable &objects,
                             const NormalizeOptions &options) {
    return Normalizer(schema, objects, options.split_cap).run();
}
}
