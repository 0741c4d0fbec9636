#include "probplan/h_m.h"

#include "probplan/errors.h"

#include <algorithm>
#include <limits>
#include <queue>

using namespace std;

namespace probplan {
namespace {
constexpr double infinity = numeric_limits<double>::infinity();

// Generalized Dijkstra for h^max: an operator fires once its last precondition is settled.
void build_h1(const DetProblem &det, const State &init, HmTable &table, size_t n) {
    const auto &ops = det.operators();
    vector<size_t> missing(ops.size());
    vector<vector<OpId>> consumers(n);
    vector<double> op_cost(ops.size(), 0);
    using Entry = pair<double, AtomId>;
    priority_queue<Entry, vector<Entry>, greater<Entry>> queue;
    for (AtomId a : init.atoms()) {
        table.at(a, a) = 0;
        queue.emplace(0, a);
    }
    auto fire = [&](OpId o) {
        double c = ops[o].cost + op_cost[o];
        for (AtomId a : det.effect(o).add) {
            if (c < table.atom(a)) {
                table.at(a, a) = c;
                queue.emplace(c, a);
            }
        }
    };
    for (OpId o = 0; o < ops.size(); ++o) {
        missing[o] = ops[o].pre_pos.size();
        for (AtomId p : ops[o].pre_pos)
            consumers[p].push_back(o);
        if (missing[o] == 0)
            fire(o);
    }
    vector<bool> done(n, false);
    while (!queue.empty()) {
        auto [c, a] = queue.top();
        queue.pop();
        if (done[a] || c > table.atom(a))
            continue;
        done[a] = true;
        for (OpId o : consumers[a]) {
            op_cost[o] = max(op_cost[o], c);
            if (--missing[o] == 0)
                fire(o);
        }
    }
}

void build_h2(const DetProblem &det, const State &init, HmTable &table, size_t n) {
    vector<AtomId> in_init = init.atoms();
    for (AtomId p : in_init)
        for (AtomId q : in_init)
            table.at(p, q) = 0;
    const auto &ops = det.operators();
    vector<vector<bool>> deleted(ops.size()), added(ops.size());
    for (OpId o = 0; o < ops.size(); ++o) {
        deleted[o].assign(n, false);
        added[o].assign(n, false);
        for (AtomId a : det.effect(o).del)
            deleted[o][a] = true;
        for (AtomId a : det.effect(o).add)
            added[o][a] = true;
    }
    auto lower = [&](AtomId p, AtomId q, double c, bool &changed) {
        if (c < table.pair(p, q)) {
            table.at(p, q) = c;
            table.at(q, p) = c;
            changed = true;
        }
    };
    // Label-correcting sweeps until no pair cost improves.
    bool changed = true;
    while (changed) {
        changed = false;
        for (OpId o = 0; o < ops.size(); ++o) {
            const GroundOperator &op = ops[o];
            double pre = table.set_cost(op.pre_pos);
            if (pre == infinity)
                continue;
            const vector<AtomId> &add = det.effect(o).add;
            for (size_t i = 0; i < add.size(); ++i)
                for (size_t j = i; j < add.size(); ++j)
                    lower(add[i], add[j], op.cost + pre, changed);
            for (AtomId q = 0; q < n; ++q) {
                if (added[o][q] || deleted[o][q])
                    continue;
                // Cost of pre(o) together with q.
                double with_q = max(pre, table.atom(q));
                for (AtomId r : op.pre_pos)
                    with_q = max(with_q, table.pair(r, q));
                if (with_q == infinity)
                    continue;
                for (AtomId p : add)
                    lower(p, q, op.cost + with_q, changed);
            }
        }
    }
}
}

HmTable::HmTable(int m, size_t atom_count)
    : m_(m), n_(atom_count), cost_(atom_count * atom_count, infinity) {
}

double HmTable::set_cost(const vector<AtomId> &atoms) const {
    double c = 0;
    for (size_t i = 0; i < atoms.size(); ++i) {
        c = max(c, atom(atoms[i]));
        if (m_ == 2)
            for (size_t j = i + 1; j < atoms.size(); ++j)
                c = max(c, pair(atoms[i], atoms[j]));
    }
    return c;
}

HmTable h_m_build(const DetProblem &det, const State &init, int m) {
    if (m != 1 && m != 2)
        throw InvalidStack("h^m is available for m = 1 and m = 2 only");
    size_t n = det.problem.atom_count();
    HmTable table(m, n);
    if (m == 1)
        build_h1(det, init, table, n);
    else
        build_h2(det, init, table, n);
    return table;
}

double h_m_eval(const HmTable &table, const vector<AtomId> &goal, double dead_end_value) {
    return min(table.set_cost(goal), dead_end_value);
}

double HmHeuristic::compute(const State &s) {
    const GroundProblem &p = det_.problem;
    if (is_goal(p, s.view()))
        return 0;
    return h_m_eval(h_m_build(det_, s, m_), p.goal_pos, dead_end_value_);
}
}
