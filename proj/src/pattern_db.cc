#include "probplan/pattern_db.h"

#include "probplan/errors.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

using namespace std;

namespace probplan {
namespace {
constexpr double infinity = numeric_limits<double>::infinity();

struct DisjointSets {
    vector<size_t> parent;
    explicit DisjointSets(size_t n) : parent(n) {iota(parent.begin(), parent.end(), 0);}
    size_t find(size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(size_t a, size_t b) {parent[find(a)] = find(b);}
};

// Splits "(pred a b)" into its tokens.
vector<string> tokens(const string &atom) {
    vector<string> out;
    string current;
    for (char c : atom) {
        if (c == '(' || c == ')' || c == ' ') {
            if (!current.empty())
                out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty())
        out.push_back(current);
    return out;
}

vector<AtomGroup> candidate_groups(const GroundProblem &p) {
    size_t n = p.atom_count();
    set<AtomGroup> candidates;

    // Atoms swapped against each other by some outcome. The second graph uses
    // only one-for-one swaps, so an operator moving two variables at once
    // does not fuse them into a single candidate.
    DisjointSets swaps(n);
    DisjointSets single_swaps(n);
    for (const GroundOperator &op : p.operators) {
        for (const GroundOutcome &out : op.outcomes) {
            vector<AtomId> consumed;
            for (AtomId d : out.del)
                if (binary_search(op.pre_pos.begin(), op.pre_pos.end(), d))
                    consumed.push_back(d);
            for (AtomId d : consumed)
                for (AtomId a : out.add)
                    swaps.unite(d, a);
            if (consumed.size() == 1 && out.add.size() == 1)
                single_swaps.unite(consumed[0], out.add[0]);
        }
    }
    for (DisjointSets *graph : {&swaps, &single_swaps}) {
        map<size_t, AtomGroup> components;
        for (AtomId a = 0; a < n; ++a)
            components[graph->find(a)].push_back(a);
        for (auto &[root, group] : components)
            if (group.size() > 1)
                candidates.insert(group);
    }

    // Predicate families that differ in one argument position.
    map<vector<string>, AtomGroup> families;
    for (AtomId a = 0; a < n; ++a) {
        vector<string> t = tokens(p.atoms.name(a));
        for (size_t i = 1; i < t.size(); ++i) {
            vector<string> key = t;
            key[i] = "*";
            key.push_back(to_string(i));
            families[key].push_back(a);
        }
    }
    for (auto &[key, group] : families)
        if (group.size() > 1)
            candidates.insert(group);
    return vector<AtomGroup>(candidates.begin(), candidates.end());
}
}

bool is_exactly_one_group(const GroundProblem &p, const AtomGroup &group) {
    auto member = [&](AtomId a) {return binary_search(group.begin(), group.end(), a);};
    size_t initially = count_if(p.init.begin(), p.init.end(), member);
    if (initially != 1)
        return false;
    for (const GroundOperator &op : p.operators) {
        for (const GroundOutcome &out : op.outcomes) {
            size_t added = count_if(out.add.begin(), out.add.end(), member);
            size_t deleted = 0;
            for (AtomId d : out.del) {
                if (!member(d))
                    continue;
                if (!binary_search(op.pre_pos.begin(), op.pre_pos.end(), d))
                    return false;
                ++deleted;
            }
            if (added == 0 && deleted == 0)
                continue;
            if (added != 1 || deleted != 1)
                return false;
        }
    }
    return true;
}

vector<AtomGroup> detect_patterns(const GroundProblem &p, size_t k) {
    vector<AtomGroup> verified;
    for (AtomGroup &g : candidate_groups(p))
        if (is_exactly_one_group(p, g))
            verified.push_back(std::move(g));
    sort(verified.begin(), verified.end(), [](const AtomGroup &a, const AtomGroup &b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    vector<AtomGroup> chosen;
    vector<bool> used(p.atom_count(), false);
    for (const AtomGroup &g : verified) {
        if (chosen.size() == k)
            break;
        if (any_of(g.begin(), g.end(), [&](AtomId a) {return used[a];}))
            continue;
        for (AtomId a : g)
            used[a] = true;
        chosen.push_back(g);
    }
    if (chosen.empty())
        throw NoPatternsFound();
    return chosen;
}

double PatternDb::zero_fraction() const {
    size_t entries = 0;
    size_t zeros = 0;
    for (size_t g = 0; g < groups.size(); ++g) {
        for (size_t i = 0; i < groups[g].size(); ++i) {
            ++entries;
            if (tables[g][i] == 0)
                ++zeros;
        }
    }
    return entries ? double(zeros) / entries : 1.0;
}

namespace {
vector<double> build_table(const DetProblem &det, const AtomGroup &group, double dead_end_value) {
    const GroundProblem &p = det.problem;
    size_t none = group.size();
    size_t states = group.size() + 1;
    auto index_of = [&](AtomId a) -> optional<size_t> {
        auto it = lower_bound(group.begin(), group.end(), a);
        if (it == group.end() || *it != a)
            return nullopt;
        return size_t(it - group.begin());
    };

    // Abstract edges reversed, for a backward uniform-cost search from the goal states.
    vector<vector<pair<size_t, double>>> reverse(states);
    for (const GroundOperator &op : p.operators) {
        vector<size_t> need;
        for (AtomId a : op.pre_pos)
            if (auto i = index_of(a))
                need.push_back(*i);
        if (need.size() > 1)
            continue;
        vector<bool> forbidden(states, false);
        for (AtomId a : op.pre_neg)
            if (auto i = index_of(a))
                forbidden[*i] = true;
        const GroundOutcome &eff = op.outcomes.front();
        optional<size_t> added;
        for (AtomId a : eff.add)
            if (auto i = index_of(a))
                added = *i;
        bool deletes = any_of(eff.del.begin(), eff.del.end(),
                              [&](AtomId a) {return index_of(a).has_value();});
        for (size_t from = 0; from < states; ++from) {
            if (!need.empty() && need.front() != from)
                continue;
            if (forbidden[from])
                continue;
            size_t to = from;
            if (added)
                to = *added;
            else if (deletes && from != none &&
                     binary_search(eff.del.begin(), eff.del.end(), group[from]))
                to = none;
            reverse[to].emplace_back(from, op.cost);
        }
    }

    vector<double> dist(states, infinity);
    using Entry = pair<double, size_t>;
    priority_queue<Entry, vector<Entry>, greater<Entry>> queue;
    for (size_t x = 0; x < states; ++x) {
        bool goal = true;
        for (AtomId a : p.goal_pos) {
            auto i = index_of(a);
            if (i && *i != x)
                goal = false;
        }
        for (AtomId a : p.goal_neg) {
            auto i = index_of(a);
            if (i && *i == x)
                goal = false;
        }
        if (goal) {
            dist[x] = 0;
            queue.emplace(0, x);
        }
    }
    while (!queue.empty()) {
        auto [d, x] = queue.top();
        queue.pop();
        if (d > dist[x])
            continue;
        for (auto [from, cost] : reverse[x]) {
            if (d + cost < dist[from]) {
                dist[from] = d + cost;
                queue.emplace(dist[from], from);
            }
        }
    }
    for (double &d : dist)
        d = min(d, dead_end_value);
    return dist;
}
}

PatternDb patterndb_build(const DetProblem &det, const vector<AtomGroup> &groups, PdbMode mode,
                          double dead_end_value) {
    PatternDb db;
    db.mode = mode;
    db.dead_end_value = dead_end_value;
    db.groups = groups;
    for (AtomGroup &g : db.groups)
        sort(g.begin(), g.end());
    if (mode == PdbMode::additive) {
        vector<int> owner(det.problem.atom_count(), -1);
        for (size_t g = 0; g < db.groups.size(); ++g) {
            for (AtomId a : db.groups[g]) {
                if (owner[a] >= 0)
                    throw AdditivityViolation("pattern groups overlap");
                owner[a] = static_cast<int>(g);
            }
        }
        for (const GroundOperator &op : det.operators()) {
            set<int> touched;
            const GroundOutcome &eff = op.outcomes.front();
            for (AtomId a : eff.add)
                if (owner[a] >= 0)
                    touched.insert(owner[a]);
            for (AtomId a : eff.del)
                if (owner[a] >= 0)
                    touched.insert(owner[a]);
            if (touched.size() > 1)
                throw AdditivityViolation("operator " + op.name + " affects two pattern groups");
        }
    }
    for (const AtomGroup &g : db.groups)
        db.tables.push_back(build_table(det, g, dead_end_value));
    return db;
}

double patterndb_eval(const PatternDb &db, const State &s) {
    double total = 0;
    for (size_t g = 0; g < db.groups.size(); ++g) {
        const AtomGroup &group = db.groups[g];
        const vector<double> &table = db.tables[g];
        // A state outside the invariant may hold several members; the minimum stays a lower bound.
        double value = infinity;
        for (size_t i = 0; i < group.size(); ++i)
            if (s.test(group[i]))
                value = min(value, table[i]);
        if (value == infinity)
            value = table[group.size()];
        if (db.mode == PdbMode::additive)
            total += value;
        else
            total = max(total, value);
    }
    return min(total, db.dead_end_value);
}
}
