#include "support.h"

#include "probplan/grounding.h"
#include "probplan/parser.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace std;
using namespace probplan;

namespace support {
string fixture(const string &name) {
    return string(PROBPLAN_FIXTURE_DIR) + "/" + name;
}

string read_text(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("missing file " + path);
    ostringstream text;
    text << in.rdbuf();
    return text.str();
}

GroundProblem ground_text(const string &domain, const string &problem) {
    return ground(parse_domain(domain), parse_problem(problem));
}

GroundProblem ground_files(const string &domain_file, const string &problem_file) {
    return ground_text(read_text(fixture(domain_file)), read_text(fixture(problem_file)));
}

namespace {
GroundOperator op(const string &name, AtomSet pre, vector<GroundOutcome> outcomes, double cost = 1) {
    GroundOperator o;
    o.name = name;
    o.pre_pos = std::move(pre);
    o.outcomes = std::move(outcomes);
    o.cost = cost;
    return o;
}
}

GroundProblem make_chain(double p) {
    GroundProblem g;
    g.name = "chain";
    g.atoms.intern("(at-s0)");
    g.atoms.intern("(at-g)");
    g.init = {0};
    g.goal_pos = {1};
    g.operators.push_back(op("(a)", {0}, {{p, {1}, {0}}, {1 - p, {}, {}}}));
    finalize(g);
    return g;
}

GroundProblem make_ladder() {
    GroundProblem g;
    g.name = "ladder";
    g.atoms.intern("(a)");
    g.atoms.intern("(b)");
    g.atoms.intern("(g)");
    g.init = {0};
    g.goal_pos = {2};
    g.operators.push_back(op("(o1)", {0}, {{1.0, {1}, {}}}));
    g.operators.push_back(op("(o2)", {1}, {{1.0, {2}, {}}}));
    finalize(g);
    return g;
}

GroundProblem make_twoway() {
    GroundProblem g;
    g.name = "twoway";
    g.atoms.intern("(at-s0)");
    g.atoms.intern("(at-g)");
    g.init = {0};
    g.goal_pos = {1};
    g.operators.push_back(op("(a)", {0}, {{1.0, {1}, {0}}}));
    g.operators.push_back(op("(b)", {0}, {{0.5, {1}, {0}}, {0.5, {}, {}}}));
    finalize(g);
    return g;
}

GroundProblem make_dead() {
    GroundProblem g;
    g.name = "dead";
    g.atoms.intern("(at-s0)");
    g.atoms.intern("(at-g)");
    g.atoms.intern("(at-d)");
    g.init = {0};
    g.goal_pos = {1};
    g.operators.push_back(op("(a)", {0}, {{0.5, {1}, {0}}, {0.5, {2}, {0}}}));
    finalize(g);
    return g;
}

GroundProblem make_two_groups(bool coupled) {
    GroundProblem g;
    g.name = coupled ? "two-groups-coupled" : "two-groups";
    for (const char *name : {"(x0)", "(x1)", "(y0)", "(y1)"})
        g.atoms.intern(name);
    g.init = {0, 2};
    g.goal_pos = {1, 3};
    g.operators.push_back(op("(move-x)", {0}, {{1.0, {1}, {0}}}));
    g.operators.push_back(op("(move-y)", {2}, {{1.0, {3}, {2}}}));
    if (coupled)
        g.operators.push_back(op("(move-both)", {0, 2}, {{1.0, {1, 3}, {0, 2}}}));
    finalize(g);
    return g;
}

GroundProblem random_problem(mt19937_64 &rng, const RandomSpec &spec) {
    auto below = [&](size_t n) {return static_cast<size_t>(rng() % n);};
    GroundProblem g;
    g.name = "random";
    size_t n = 3 + below(spec.max_atoms - 2);
    for (size_t a = 0; a < n; ++a)
        g.atoms.intern("(p" + to_string(a) + ")");
    auto subset = [&](size_t max_size) {
        AtomSet s;
        size_t k = below(max_size + 1);
        for (size_t i = 0; i < k; ++i)
            s.push_back(static_cast<AtomId>(below(n)));
        sort(s.begin(), s.end());
        s.erase(unique(s.begin(), s.end()), s.end());
        return s;
    };
    g.init = subset(3);
    do {
        g.goal_pos = subset(2);
    } while (g.goal_pos.empty());

    size_t ops = 1 + below(spec.max_operators);
    for (size_t i = 0; i < ops; ++i) {
        GroundOperator o;
        o.name = "(o" + to_string(i) + ")";
        o.pre_pos = subset(2);
        if (!spec.delete_free && below(3) == 0) {
            AtomSet neg = subset(1);
            for (AtomId a : neg)
                if (!binary_search(o.pre_pos.begin(), o.pre_pos.end(), a))
                    o.pre_neg.push_back(a);
        }
        o.cost = spec.delete_free ? 1.0 : static_cast<double>(1 + below(3));
        size_t outcomes = spec.delete_free ? 1 : 1 + below(spec.max_outcomes);
        double weight_sum = 0;
        vector<double> weights;
        for (size_t k = 0; k < outcomes; ++k) {
            weights.push_back(1 + below(9));
            weight_sum += weights.back();
        }
        for (size_t k = 0; k < outcomes; ++k) {
            GroundOutcome out;
            out.probability = weights[k] / weight_sum;
            out.add = subset(2);
            if (!spec.delete_free)
                out.del = subset(2);
            o.outcomes.push_back(std::move(out));
        }
        g.operators.push_back(std::move(o));
    }
    finalize(g);
    return g;
}

AtomSet successor(const AtomSet &s, const GroundOutcome &outcome) {
    set<AtomId> next(s.begin(), s.end());
    for (AtomId a : outcome.del)
        next.erase(a);
    for (AtomId a : outcome.add)
        next.insert(a);
    return AtomSet(next.begin(), next.end());
}

bool holds(const GroundProblem &, const AtomSet &s, const GroundOperator &op) {
    for (AtomId a : op.pre_pos)
        if (!binary_search(s.begin(), s.end(), a))
            return false;
    for (AtomId a : op.pre_neg)
        if (binary_search(s.begin(), s.end(), a))
            return false;
    return true;
}

bool goal_holds(const GroundProblem &p, const AtomSet &s) {
    for (AtomId a : p.goal_pos)
        if (!binary_search(s.begin(), s.end(), a))
            return false;
    for (AtomId a : p.goal_neg)
        if (binary_search(s.begin(), s.end(), a))
            return false;
    return true;
}

vector<AtomSet> reachable_states(const GroundProblem &p) {
    set<AtomSet> seen{p.init};
    vector<AtomSet> order{p.init};
    for (size_t i = 0; i < order.size(); ++i) {
        AtomSet s = order[i];
        if (goal_holds(p, s))
            continue;
        for (const GroundOperator &o : p.operators) {
            if (!holds(p, s, o))
                continue;
            for (const GroundOutcome &out : o.outcomes) {
                AtomSet t = successor(s, out);
                if (seen.insert(t).second)
                    order.push_back(t);
            }
        }
    }
    return order;
}

namespace {
// States from which some sequence of outcomes reaches a goal.
set<AtomSet> can_reach_goal(const GroundProblem &p, const vector<AtomSet> &states) {
    set<AtomSet> alive;
    for (const AtomSet &s : states)
        if (goal_holds(p, s))
            alive.insert(s);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const AtomSet &s : states) {
            if (alive.count(s))
                continue;
            for (const GroundOperator &o : p.operators) {
                if (!holds(p, s, o))
                    continue;
                for (const GroundOutcome &out : o.outcomes) {
                    if (alive.count(successor(s, out))) {
                        alive.insert(s);
                        changed = true;
                        break;
                    }
                }
                if (alive.count(s))
                    break;
            }
        }
    }
    return alive;
}

map<AtomSet, double> iterate(const GroundProblem &p, double D, bool optimistic) {
    vector<AtomSet> states = reachable_states(p);
    set<AtomSet> alive = can_reach_goal(p, states);
    map<AtomSet, double> v;
    for (const AtomSet &s : states)
        v[s] = alive.count(s) ? 0.0 : D;
    for (size_t sweep = 0; sweep < 10000000; ++sweep) {
        map<AtomSet, double> next = v;
        double change = 0;
        for (const AtomSet &s : states) {
            if (goal_holds(p, s) || !alive.count(s))
                continue;
            double best = numeric_limits<double>::infinity();
            for (const GroundOperator &o : p.operators) {
                if (!holds(p, s, o))
                    continue;
                double q;
                if (optimistic) {
                    q = numeric_limits<double>::infinity();
                    for (const GroundOutcome &out : o.outcomes)
                        q = min(q, o.cost + v.at(successor(s, out)));
                } else {
                    q = o.cost;
                    for (const GroundOutcome &out : o.outcomes)
                        q += out.probability * v.at(successor(s, out));
                }
                best = min(best, q);
            }
            next[s] = min(best, D);
            change = max(change, fabs(next[s] - v[s]));
        }
        v.swap(next);
        if (change <= 1e-11 * max(1.0, D / 1e6))
            break;
    }
    return v;
}
}

map<AtomSet, double> optimal_values(const GroundProblem &p, double dead_end_value) {
    return iterate(p, dead_end_value, false);
}

map<AtomSet, double> min_min_values(const GroundProblem &p, double dead_end_value) {
    return iterate(p, dead_end_value, true);
}

int delete_free_optimum(const GroundProblem &p, const AtomSet &s) {
    map<AtomSet, int> depth{{s, 0}};
    deque<AtomSet> queue{s};
    while (!queue.empty()) {
        AtomSet current = queue.front();
        queue.pop_front();
        bool done = all_of(p.goal_pos.begin(), p.goal_pos.end(), [&](AtomId g) {
            return binary_search(current.begin(), current.end(), g);
        });
        if (done)
            return depth[current];
        for (const GroundOperator &o : p.operators) {
            bool ok = all_of(o.pre_pos.begin(), o.pre_pos.end(), [&](AtomId a) {
                return binary_search(current.begin(), current.end(), a);
            });
            if (!ok)
                continue;
            for (GroundOutcome relaxed : o.outcomes) {
                relaxed.del.clear();
                AtomSet next = successor(current, relaxed);
                if (!depth.count(next)) {
                    depth[next] = depth[current] + 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return -1;
}

State to_state(const GroundProblem &p, const AtomSet &s) {
    return State(p.atom_count(), s);
}

AtomSet to_atoms(const State &s) {
    return s.atoms();
}
}
