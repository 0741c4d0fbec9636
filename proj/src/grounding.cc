#include "probplan/grounding.h"

#include "probplan/errors.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace std;

namespace probplan {
namespace {
using Bindings = map<string, string>;

struct CandidateOutcome {
    Rational probability;
    vector<int> add;
    vector<int> del;
};

struct Candidate {
    string name;
    size_t schema;
    vector<int> pre_pos;
    vector<int> pre_neg;
    Rational cost;
    vector<CandidateOutcome> outcomes;
};

void sort_unique(vector<int> &v) {
    sort(v.begin(), v.end());
    v.erase(unique(v.begin(), v.end()), v.end());
}

class Grounder {
    const DomainAst &domain;
    const ProblemAst &problem;
    const GroundingOptions &options;
    ObjectTable objects;
    map<string, size_t> arity;
    AtomTable scratch;
    vector<Candidate> candidates;
    vector<int> init;
    vector<int> goal_pos;
    vector<int> goal_neg;

    string ground_name(const AtomExpr &atom, const Bindings &bindings) const {
        string out = "(" + atom.predicate;
        for (const string &arg : atom.args) {
            auto it = bindings.find(arg);
            out += " " + (it == bindings.end() ? arg : it->second);
        }
        return out + ")";
    }

    int ground_atom(const AtomExpr &atom, const Bindings &bindings) {
        return static_cast<int>(scratch.intern(ground_name(atom, bindings)));
    }

    void check_atom(const AtomExpr &atom, const SourceLocation &loc) const {
        auto it = arity.find(atom.predicate);
        if (it == arity.end())
            throw SemanticError(loc, "undeclared predicate '" + atom.predicate + "'");
        if (it->second != atom.args.size())
            throw SemanticError(loc, "predicate '" + atom.predicate + "' expects " +
                                to_string(it->second) + " arguments");
        for (const string &arg : atom.args)
            if (!objects.contains(arg))
                throw SemanticError(loc, "undeclared object '" + arg + "'");
    }

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

    void flatten_goal(const Formula &f, bool positive, const Bindings &bindings) {
        using K = Formula::Kind;
        auto resolve = [&](const string &term) {
            auto it = bindings.find(term);
            return it == bindings.end() ? term : it->second;
        };
        switch (f.kind) {
        case K::truth:
            if (f.value != positive)
                throw InputError(problem.goal_location.str() + ": goal is unsatisfiable");
            return;
        case K::atom: {
            AtomExpr bound = f.atom;
            for (string &arg : bound.args)
                arg = resolve(arg);
            check_atom(bound, f.location);
            (positive ? goal_pos : goal_neg).push_back(ground_atom(bound, {}));
            return;
        }
        case K::equality:
            if ((resolve(f.atom.args[0]) == resolve(f.atom.args[1])) != positive)
                throw InputError(problem.goal_location.str() + ": goal is unsatisfiable");
            return;
        case K::negation:
            flatten_goal(f.parts[0], !positive, bindings);
            return;
        case K::conjunction:
        case K::disjunction: {
            bool conjunctive = (f.kind == K::conjunction) == positive;
            if (!conjunctive && f.parts.size() > 1)
                throw UnsupportedConstruct(f.location, "disjunctive goal");
            for (const Formula &part : f.parts)
                flatten_goal(part, positive, bindings);
            return;
        }
        case K::universal: {
            vector<Bindings> instances;
            for_each_binding(f.variables, bindings,
                             [&](const Bindings &b) {instances.push_back(b);});
            if (!positive && instances.size() > 1)
                throw UnsupportedConstruct(f.location, "existential goal");
            for (const Bindings &b : instances)
                flatten_goal(f.parts[0], positive, b);
            return;
        }
        }
    }

    void instantiate(const FlatSchema &flat, size_t schema_index, const Bindings &bindings,
                     SchemaGroundingStats &stats) {
        Candidate c;
        c.schema = schema_index;
        c.name = "(" + flat.name;
        for (const TypedName &param : flat.parameters)
            c.name += " " + bindings.at(param.name);
        c.name += ")";
        c.cost = flat.cost;
        for (const Literal &lit : flat.precondition) {
            if (lit.atom.predicate == "=") {
                string lhs = ground_name({"", {lit.atom.args[0]}}, bindings);
                string rhs = ground_name({"", {lit.atom.args[1]}}, bindings);
                if ((lhs == rhs) != lit.positive)
                    return;
                continue;
            }
            (lit.positive ? c.pre_pos : c.pre_neg).push_back(ground_atom(lit.atom, bindings));
        }
        sort_unique(c.pre_pos);
        sort_unique(c.pre_neg);
        vector<int> clash;
        set_intersection(c.pre_pos.begin(), c.pre_pos.end(), c.pre_neg.begin(), c.pre_neg.end(),
                         back_inserter(clash));
        if (!clash.empty())
            return;
        map<pair<vector<int>, vector<int>>, Rational> merged;
        vector<pair<vector<int>, vector<int>>> order;
        for (const FlatOutcome &out : flat.outcomes) {
            vector<int> add;
            vector<int> del_all;
            for (const AtomExpr &a : out.add)
                add.push_back(ground_atom(a, bindings));
            for (const AtomExpr &a : out.del)
                del_all.push_back(ground_atom(a, bindings));
            sort_unique(add);
            sort_unique(del_all);
            vector<int> del;
            set_difference(del_all.begin(), del_all.end(), add.begin(), add.end(),
                           back_inserter(del));
            auto key = make_pair(std::move(add), std::move(del));
            auto [it, inserted] = merged.try_emplace(key, Rational(0));
            if (inserted)
                order.push_back(key);
            it->second += out.probability;
        }
        for (auto &key : order)
            c.outcomes.push_back({merged[key], key.first, key.second});
        ++stats.operators_before_prune;
        candidates.push_back(std::move(c));
    }

    vector<bool> reachable_candidates() const {
        vector<bool> enabled(candidates.size(), !options.prune);
        if (!options.prune)
            return enabled;
        vector<bool> reached(scratch.size(), false);
        for (int a : init)
            reached[a] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < candidates.size(); ++i) {
                if (enabled[i])
                    continue;
                const Candidate &c = candidates[i];
                if (!all_of(c.pre_pos.begin(), c.pre_pos.end(), [&](int a) {return reached[a];}))
                    continue;
                enabled[i] = true;
                changed = true;
                for (const CandidateOutcome &out : c.outcomes)
                    for (int a : out.add)
                        reached[a] = true;
            }
        }
        return enabled;
    }

public:
    Grounder(const DomainAst &domain, const ProblemAst &problem, const GroundingOptions &options)
        : domain(domain), problem(problem), options(options), objects(domain, &problem) {
        for (const PredicateDecl &pred : domain.predicates)
            arity[pred.name] = pred.parameters.size();
    }

    GroundProblem run(GroundingReport *report) {
        if (!problem.domain_name.empty() && problem.domain_name != domain.name)
            throw SemanticError(problem.goal_location, "problem refers to domain '" +
                                problem.domain_name + "', not '" + domain.name + "'");
        for (const AtomExpr &atom : problem.init) {
            check_atom(atom, {});
            init.push_back(ground_atom(atom, {}));
        }
        flatten_goal(problem.goal, true, {});
        if (goal_pos.empty() && goal_neg.empty())
            throw EmptyGoal();

        vector<SchemaGroundingStats> stats;
        for (size_t s = 0; s < domain.schemas.size(); ++s) {
            const ActionSchema &schema = domain.schemas[s];
            SchemaGroundingStats st;
            st.name = schema.name;
            vector<FlatSchema> flats = normalize(schema, objects, options.normalize);
            st.split_copies = flats.size();
            st.instantiations = 1;
            for (const TypedName &param : schema.parameters)
                st.instantiations *= objects.objects_of(param.type).size();
            for (const FlatSchema &flat : flats)
                for_each_binding(flat.parameters, {},
                                 [&](const Bindings &b) {instantiate(flat, s, b, st);});
            stats.push_back(std::move(st));
        }

        vector<bool> keep = reachable_candidates();
        GroundProblem result;
        result.name = problem.name;
        result.domain_name = domain.name;
        vector<AtomId> remap(scratch.size(), static_cast<AtomId>(-1));
        auto id = [&](int scratch_id) {
            if (remap[scratch_id] == static_cast<AtomId>(-1))
                remap[scratch_id] = result.atoms.intern(scratch.name(scratch_id));
            return remap[scratch_id];
        };
        for (int a : init)
            result.init.push_back(id(a));
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (!keep[i])
                continue;
            const Candidate &c = candidates[i];
            ++stats[c.schema].operators_after_prune;
            GroundOperator op;
            op.name = c.name;
            op.cost = to_double(c.cost);
            for (int a : c.pre_pos)
                op.pre_pos.push_back(id(a));
            for (int a : c.pre_neg)
                op.pre_neg.push_back(id(a));
            for (const CandidateOutcome &out : c.outcomes) {
                GroundOutcome g;
                g.probability = to_double(out.probability);
                for (int a : out.add)
                    g.add.push_back(id(a));
                for (int a : out.del)
                    g.del.push_back(id(a));
                op.outcomes.push_back(std::move(g));
            }
            result.operators.push_back(std::move(op));
        }
        for (int a : goal_pos)
            result.goal_pos.push_back(id(a));
        for (int a : goal_neg)
            result.goal_neg.push_back(id(a));
        finalize(result);

        if (report) {
            report->schemas = std::move(stats);
            report->operators_before_prune = candidates.size();
            report->operators_after_prune = result.operators.size();
        }
        return result;
    }
};
}

GroundProblem ground(const DomainAst &domain, const ProblemAst &problem,
                     const GroundingOptions &options, GroundingReport *report) {
    return Grounder(domain, problem, options).run(report);
}
}
