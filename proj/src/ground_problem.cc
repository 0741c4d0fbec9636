#include "probplan/ground_problem.h"

#include "probplan/errors.h"

#include <algorithm>
#include <cmath>

using namespace std;

namespace probplan {
AtomId AtomTable::intern(const string &name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<AtomId>(names_.size()));
    if (inserted)
        names_.push_back(name);
    return it->second;
}

optional<AtomId> AtomTable::find(const string &name) const {
    auto it = ids_.find(name);
    if (it == ids_.end())
        return nullopt;
    return it->second;
}

namespace {
void canonicalize(vector<AtomId> &atoms, size_t atom_count, const string &context) {
    sort(atoms.begin(), atoms.end());
    atoms.erase(unique(atoms.begin(), atoms.end()), atoms.end());
    if (!atoms.empty() && atoms.back() >= atom_count)
        throw InputError(context + ": atom id out of range");
}
}

void finalize(GroundProblem &problem) {
    size_t n = problem.atom_count();
    canonicalize(problem.init, n, "initial state");
    canonicalize(problem.goal_pos, n, "goal");
    canonicalize(problem.goal_neg, n, "goal");
    for (size_t i = 0; i < problem.operators.size(); ++i) {
        GroundOperator &op = problem.operators[i];
        op.id = static_cast<OpId>(i);
        canonicalize(op.pre_pos, n, op.name);
        canonicalize(op.pre_neg, n, op.name);
        if (op.outcomes.empty())
            throw InputError(op.name + ": operator without outcomes");
        if (!(op.cost >= 0))
            throw InputError(op.name + ": negative cost");
        double total = 0;
        for (GroundOutcome &out : op.outcomes) {
            canonicalize(out.add, n, op.name);
            canonicalize(out.del, n, op.name);
            vector<AtomId> del;
            set_difference(out.del.begin(), out.del.end(), out.add.begin(), out.add.end(),
                           back_inserter(del));
            out.del = std::move(del);
            total += out.probability;
        }
        if (fabs(total - 1.0) > 1e-6)
            throw ProbabilitySumError(op.name + ": outcome probabilities sum to " +
                                      to_string(total));
        for (GroundOutcome &out : op.outcomes)
            out.probability /= total;
    }
}
}
