#include "probplan/parser.h"

#include "probplan/sexpr.h"

#include <algorithm>
#include <map>
#include <set>

using namespace std;

namespace probplan {
namespace {
const set<string> supported_requirements = {
    ":strips", ":typing", ":equality", ":negative-preconditions",
    ":disjunctive-preconditions", ":universal-preconditions",
    ":conditional-effects", ":probabilistic-effects", ":adl", ":rewards"};

[[noreturn]] void unsupported(const SExpr &node, const string &what) {
    throw UnsupportedConstruct(node.location, what);
}

[[noreturn]] void syntax(const SExpr &node, const string &message) {
    throw SyntaxError(node.location, message);
}

const string &expect_symbol(const SExpr &node, const char *what) {
    if (!node.is_symbol())
        syntax(node, string("expected ") + what + ", found " + node.str());
    return node.text;
}

bool is_keyword(const SExpr &node) {
    return node.is_symbol() && !node.text.empty() && node.text.front() == ':';
}

vector<TypedName> parse_typed_list(const vector<SExpr> &items, size_t begin, bool variables) {
    vector<TypedName> result;
    size_t pending = 0;
    for (size_t i = begin; i < items.size(); ++i) {
        const SExpr &item = items[i];
        if (item.is_symbol("-")) {
            if (i + 1 >= items.size())
                syntax(item, "type name missing after '-'");
            const SExpr &type = items[i + 1];
            if (type.is_form("either"))
                unsupported(type, "(either ...) types");
            const string &type_name = expect_symbol(type, "type name");
            if (pending == 0)
                syntax(item, "'-' without preceding names");
            for (size_t j = result.size() - pending; j < result.size(); ++j)
                result[j].type = type_name;
            pending = 0;
            ++i;
            continue;
        }
        const string &name = expect_symbol(item, variables ? "variable" : "name");
        if (variables && !is_variable(name))
            syntax(item, "expected variable, found '" + name + "'");
        result.push_back({name, "object"});
        ++pending;
    }
    return result;
}

vector<TypedName> parse_variable_list(const SExpr &node) {
    if (!node.is_list())
        syntax(node, "expected variable list");
    return parse_typed_list(node.children, 0, true);
}

AtomExpr parse_atom(const SExpr &node) {
    if (!node.is_list() || node.children.empty())
        syntax(node, "expected atom, found " + node.str());
    AtomExpr atom;
    atom.predicate = expect_symbol(node.children[0], "predicate name");
    for (size_t i = 1; i < node.children.size(); ++i)
        atom.args.push_back(expect_symbol(node.children[i], "term"));
    return atom;
}

Formula parse_formula(const SExpr &node) {
    if (!node.is_list())
        syntax(node, "expected formula, found '" + node.text + "'");
    Formula result;
    if (node.children.empty()) {
        result = Formula::make_truth(true);
    } else if (node.is_form("and") || node.is_form("or")) {
        vector<Formula> parts;
        for (size_t i = 1; i < node.children.size(); ++i)
            parts.push_back(parse_formula(node.children[i]));
        result = node.is_form("and") ? Formula::make_and(std::move(parts))
                                     : Formula::make_or(std::move(parts));
    } else if (node.is_form("not")) {
        if (node.children.size() != 2)
            syntax(node, "'not' takes one argument");
        result = Formula::make_not(parse_formula(node.children[1]));
    } else if (node.is_form("imply")) {
        if (node.children.size() != 3)
            syntax(node, "'imply' takes two arguments");
        result = Formula::make_or({Formula::make_not(parse_formula(node.children[1])),
                                   parse_formula(node.children[2])});
    } else if (node.is_form("=")) {
        if (node.children.size() != 3)
            syntax(node, "'=' takes two terms");
        if (node.children[1].is_list() || node.children[2].is_list())
            unsupported(node, "numeric comparison (fluents)");
        result = Formula::make_equality(node.children[1].text, node.children[2].text);
    } else if (node.is_form("forall")) {
        if (node.children.size() != 3)
            syntax(node, "'forall' takes a variable list and a body");
        result = Formula::make_forall(parse_variable_list(node.children[1]),
                                      parse_formula(node.children[2]));
    } else if (node.is_form("exists")) {
        unsupported(node, "(exists ...)");
    } else if (node.is_form("<") || node.is_form(">") || node.is_form("<=") ||
               node.is_form(">=")) {
        unsupported(node, "numeric comparison (fluents)");
    } else if (node.is_form("when") || node.is_form("probabilistic")) {
        syntax(node, "effect form used as a condition");
    } else {
        result = Formula::make_atom(parse_atom(node));
    }
    result.location = node.location;
    return result;
}

Effect parse_effect(const SExpr &node) {
    if (!node.is_list())
        syntax(node, "expected effect, found '" + node.text + "'");
    Effect result;
    if (node.children.empty()) {
        result = Effect::make_and({});
    } else if (node.is_form("and")) {
        vector<Effect> parts;
        for (size_t i = 1; i < node.children.size(); ++i)
            parts.push_back(parse_effect(node.children[i]));
        result = Effect::make_and(std::move(parts));
    } else if (node.is_form("not")) {
        if (node.children.size() != 2)
            syntax(node, "'not' takes one argument");
        result = Effect::make_del(parse_atom(node.children[1]));
    } else if (node.is_form("when")) {
        if (node.children.size() != 3)
            syntax(node, "'when' takes a condition and an effect");
        result = Effect::make_when(parse_formula(node.children[1]),
                                   parse_effect(node.children[2]));
    } else if (node.is_form("forall")) {
        if (node.children.size() != 3)
            syntax(node, "'forall' takes a variable list and a body");
        result = Effect::make_forall(parse_variable_list(node.children[1]),
                                     parse_effect(node.children[2]));
    } else if (node.is_form("probabilistic")) {
        if (node.children.size() % 2 != 1)
            syntax(node, "'probabilistic' takes probability/effect pairs");
        vector<pair<Rational, Effect>> branches;
        Rational total = 0;
        for (size_t i = 1; i < node.children.size(); i += 2) {
            const SExpr &p = node.children[i];
            auto prob = p.is_symbol() ? parse_rational(p.text) : nullopt;
            if (!prob)
                syntax(p, "expected probability, found " + p.str());
            if (*prob <= Rational(0) || *prob > Rational(1))
                syntax(p, "probability " + p.text + " outside (0,1]");
            total += *prob;
            branches.emplace_back(*prob, parse_effect(node.children[i + 1]));
        }
        if (total > Rational(1))
            throw ProbabilitySumError(node.location.str() + ": branch probabilities sum to " +
                                      to_string(total) + " > 1");
        result = Effect::make_probabilistic(std::move(branches));
    } else if (node.is_form("decrease")) {
        if (node.children.size() != 3 || !node.children[1].is_form("reward") ||
            node.children[1].children.size() != 1)
            unsupported(node, "numeric effect other than (decrease (reward) k)");
        const SExpr &amount = node.children[2];
        auto k = amount.is_symbol() ? parse_rational(amount.text) : nullopt;
        if (!k)
            unsupported(amount, "non-constant reward decrease");
        result = Effect::make_cost(*k);
    } else if (node.is_form("increase") || node.is_form("assign") ||
               node.is_form("scale-up") || node.is_form("scale-down")) {
        unsupported(node, "(" + node.children[0].text + " ...) (fluents)");
    } else {
        result = Effect::make_add(parse_atom(node));
    }
    result.location = node.location;
    return result;
}

void parse_requirements(const SExpr &section, vector<string> &out) {
    for (size_t i = 1; i < section.children.size(); ++i) {
        const SExpr &req = section.children[i];
        const string &name = expect_symbol(req, "requirement");
        if (!supported_requirements.count(name))
            unsupported(req, "requirement " + name);
        out.push_back(name);
    }
}

ActionSchema parse_action(const SExpr &section) {
    ActionSchema schema;
    schema.location = section.location;
    if (section.children.size() < 2)
        syntax(section, "action name missing");
    schema.name = expect_symbol(section.children[1], "action name");
    schema.precondition = Formula::make_truth(true);
    schema.effect = Effect::make_and({});
    for (size_t i = 2; i < section.children.size(); i += 2) {
        const SExpr &key = section.children[i];
        if (!is_keyword(key))
            syntax(key, "expected action keyword, found " + key.str());
        if (i + 1 >= section.children.size())
            syntax(key, "missing value for " + key.text);
        const SExpr &value = section.children[i + 1];
        if (key.text == ":parameters")
            schema.parameters = parse_variable_list(value);
        else if (key.text == ":precondition")
            schema.precondition = parse_formula(value);
        else if (key.text == ":effect")
            schema.effect = parse_effect(value);
        else
            unsupported(key, "action keyword " + key.text);
    }
    return schema;
}

struct DomainChecker {
    const DomainAst &domain;
    map<string, size_t> arity;
    set<string> types{"object"};
    set<string> constants;

    explicit DomainChecker(const DomainAst &domain) : domain(domain) {
        for (const auto &[type, parent] : domain.types) {
            types.insert(type);
            types.insert(parent);
        }
        for (const auto &[type, parent] : domain.types) {
            (void)type;
            if (!types.count(parent))
                throw SemanticError({}, "undeclared type '" + parent + "'");
        }
        for (const PredicateDecl &pred : domain.predicates) {
            arity[pred.name] = pred.parameters.size();
            check_types(pred.parameters, {});
        }
        for (const TypedName &c : domain.constants) {
            check_type(c.type, {});
            constants.insert(c.name);
        }
    }

    void check_type(const string &type, const SourceLocation &loc) const {
        if (!types.count(type))
            throw SemanticError(loc, "undeclared type '" + type + "'");
    }

    void check_types(const vector<TypedName> &names, const SourceLocation &loc) const {
        for (const TypedName &n : names)
            check_type(n.type, loc);
    }

    void check_term(const string &term, const vector<string> &scope,
                    const SourceLocation &loc) const {
        if (is_variable(term)) {
            if (find(scope.begin(), scope.end(), term) == scope.end())
                throw SemanticError(loc, "unbound variable '" + term + "'");
        } else if (!constants.count(term)) {
            throw SemanticError(loc, "undeclared constant '" + term + "'");
        }
    }

    void check_atom(const AtomExpr &atom, const vector<string> &scope,
                    const SourceLocation &loc) const {
        auto it = arity.find(atom.predicate);
        if (it == arity.end())
            throw SemanticError(loc, "undeclared predicate '" + atom.predicate + "'");
        if (it->second != atom.args.size())
            throw SemanticError(loc, "predicate '" + atom.predicate + "' expects " +
                                to_string(it->second) + " arguments");
        for (const string &arg : atom.args)
            check_term(arg, scope, loc);
    }

    static vector<string> extend(vector<string> scope, const vector<TypedName> &vars) {
        for (const TypedName &v : vars)
            scope.push_back(v.name);
        return scope;
    }

    void check_formula(const Formula &f, const vector<string> &scope) const {
        switch (f.kind) {
        case Formula::Kind::truth:
            break;
        case Formula::Kind::atom:
            check_atom(f.atom, scope, f.location);
            break;
        case Formula::Kind::equality:
            for (const string &arg : f.atom.args)
                check_term(arg, scope, f.location);
            break;
        case Formula::Kind::universal:
            check_types(f.variables, f.location);
            check_formula(f.parts[0], extend(scope, f.variables));
            break;
        default:
            for (const Formula &part : f.parts)
                check_formula(part, scope);
        }
    }

    void check_effect(const Effect &e, const vector<string> &scope) const {
        switch (e.kind) {
        case Effect::Kind::add:
        case Effect::Kind::del:
            check_atom(e.atom, scope, e.location);
            break;
        case Effect::Kind::cost:
            break;
        case Effect::Kind::conditional:
            check_formula(e.condition, scope);
            check_effect(e.parts[0], scope);
            break;
        case Effect::Kind::universal:
            check_types(e.variables, e.location);
            check_effect(e.parts[0], extend(scope, e.variables));
            break;
        default:
            for (const Effect &part : e.parts)
                check_effect(part, scope);
        }
    }

    void check() const {
        for (const ActionSchema &schema : domain.schemas) {
            check_types(schema.parameters, schema.location);
            vector<string> scope = extend({}, schema.parameters);
            check_formula(schema.precondition, scope);
            check_effect(schema.effect, scope);
        }
    }
};

DomainAst parse_domain_form(const SExpr &form) {
    DomainAst domain;
    const SExpr &header = form.children[1];
    if (!header.is_form("domain") || header.children.size() != 2)
        syntax(header, "expected (domain <name>)");
    domain.name = expect_symbol(header.children[1], "domain name");
    for (size_t i = 2; i < form.children.size(); ++i) {
        const SExpr &section = form.children[i];
        if (!section.is_list() || section.children.empty() || !is_keyword(section.children[0]))
            syntax(section, "expected domain section");
        const string &key = section.children[0].text;
        if (key == ":requirements") {
            parse_requirements(section, domain.requirements);
        } else if (key == ":types") {
            for (const TypedName &t : parse_typed_list(section.children, 1, false))
                domain.types.emplace_back(t.name, t.type);
        } else if (key == ":constants") {
            auto constants = parse_typed_list(section.children, 1, false);
            domain.constants.insert(domain.constants.end(), constants.begin(), constants.end());
        } else if (key == ":predicates") {
            for (size_t j = 1; j < section.children.size(); ++j) {
                const SExpr &decl = section.children[j];
                if (!decl.is_list() || decl.children.empty())
                    syntax(decl, "expected predicate declaration");
                PredicateDecl pred;
                pred.name = expect_symbol(decl.children[0], "predicate name");
                pred.parameters = parse_typed_list(decl.children, 1, true);
                domain.predicates.push_back(std::move(pred));
            }
        } else if (key == ":action") {
            domain.schemas.push_back(parse_action(section));
        } else if (key == ":functions") {
            unsupported(section, "(:functions ...) (fluents)");
        } else {
            unsupported(section, "(" + key + " ...)");
        }
    }
    DomainChecker(domain).check();
    return domain;
}

ProblemAst parse_problem_form(const SExpr &form) {
    ProblemAst problem;
    const SExpr &header = form.children[1];
    if (!header.is_form("problem") || header.children.size() != 2)
        syntax(header, "expected (problem <name>)");
    problem.name = expect_symbol(header.children[1], "problem name");
    bool has_goal = false;
    for (size_t i = 2; i < form.children.size(); ++i) {
        const SExpr &section = form.children[i];
        if (!section.is_list() || section.children.empty() || !is_keyword(section.children[0]))
            syntax(section, "expected problem section");
        const string &key = section.children[0].text;
        if (key == ":domain") {
            if (section.children.size() != 2)
                syntax(section, "expected (:domain <name>)");
            problem.domain_name = expect_symbol(section.children[1], "domain name");
        } else if (key == ":requirements") {
            vector<string> ignored;
            parse_requirements(section, ignored);
        } else if (key == ":objects") {
            problem.objects = parse_typed_list(section.children, 1, false);
        } else if (key == ":init") {
            for (size_t j = 1; j < section.children.size(); ++j) {
                const SExpr &fact = section.children[j];
                if (fact.is_form("="))
                    unsupported(fact, "numeric initial value (fluents)");
                if (fact.is_form("probabilistic"))
                    unsupported(fact, "probabilistic initial state");
                if (fact.is_form("not") || fact.is_form("and"))
                    unsupported(fact, "(" + fact.children[0].text + " ...) in :init");
                AtomExpr atom = parse_atom(fact);
                for (const string &arg : atom.args)
                    if (is_variable(arg))
                        syntax(fact, "variable in initial state");
                problem.init.push_back(std::move(atom));
            }
        } else if (key == ":goal") {
            if (section.children.size() != 2)
                syntax(section, "expected (:goal <formula>)");
            problem.goal = parse_formula(section.children[1]);
            problem.goal_location = section.location;
            has_goal = true;
        } else if (key == ":metric") {
            unsupported(section, "(:metric ...)");
        } else if (key == ":goal-reward") {
            unsupported(section, "(:goal-reward ...)");
        } else {
            unsupported(section, "(" + key + " ...)");
        }
    }
    if (!has_goal)
        syntax(form, "problem has no :goal");
    return problem;
}
}

ParsedTask parse(string_view text, const string &file) {
    ParsedTask task;
    for (const SExpr &form : read_sexprs(text, file)) {
        if (!form.is_form("define") || form.children.size() < 2 || !form.children[1].is_list())
            syntax(form, "expected (define ...)");
        if (form.children[1].is_form("domain")) {
            if (task.domain)
                syntax(form, "second domain definition");
            task.domain = parse_domain_form(form);
        } else if (form.children[1].is_form("problem")) {
            if (task.problem)
                syntax(form, "second problem definition");
            task.problem = parse_problem_form(form);
        } else {
            syntax(form.children[1], "expected (domain ...) or (problem ...)");
        }
    }
    return task;
}

DomainAst parse_domain(string_view text, const string &file) {
    ParsedTask task = parse(text, file);
    if (!task.domain)
        throw SyntaxError({file, 1, 1}, "no domain definition");
    return std::move(*task.domain);
}

ProblemAst parse_problem(string_view text, const string &file) {
    ParsedTask task = parse(text, file);
    if (!task.problem)
        throw SyntaxError({file, 1, 1}, "no problem definition");
    return std::move(*task.problem);
}
}
