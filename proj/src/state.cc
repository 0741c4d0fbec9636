#include "probplan/state.h"

#include <bit>

using namespace std;

namespace probplan {
size_t words_for(size_t atom_count) {
    return (atom_count + 63) / 64;
}

vector<AtomId> StateView::atoms() const {
    vector<AtomId> result;
    for (size_t w = 0; w < width_; ++w) {
        uint64_t bits = words_[w];
        while (bits) {
            result.push_back(static_cast<AtomId>(w * 64 + countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return result;
}

State::State(size_t atom_count, const vector<AtomId> &atoms) : State(atom_count) {
    for (AtomId a : atoms)
        set(a);
}

namespace {
inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}
}

uint64_t hash64(const uint64_t *words, size_t width) {
    uint64_t h = 0x6a09e667f3bcc908ULL ^ (width * 0x9e3779b97f4a7c15ULL);
    for (size_t i = 0; i < width; ++i) {
        h ^= mix64(words[i] + 0x9e3779b97f4a7c15ULL * (i + 1));
        h = rotl(h, 29) * 0xff51afd7ed558ccdULL;
    }
    return mix64(h);
}

bool contains_all(StateView s, const vector<AtomId> &atoms) {
    for (AtomId a : atoms)
        if (!s.test(a))
            return false;
    return true;
}

bool contains_none(StateView s, const vector<AtomId> &atoms) {
    for (AtomId a : atoms)
        if (s.test(a))
            return false;
    return true;
}

bool is_goal(const GroundProblem &problem, StateView s) {
    return contains_all(s, problem.goal_pos) && contains_none(s, problem.goal_neg);
}

bool is_applicable(const GroundOperator &op, StateView s) {
    return contains_all(s, op.pre_pos) && contains_none(s, op.pre_neg);
}

vector<OpId> applicable(const GroundProblem &problem, StateView s) {
    vector<OpId> result;
    for (const GroundOperator &op : problem.operators)
        if (is_applicable(op, s))
            result.push_back(op.id);
    return result;
}

State initial_state(const GroundProblem &problem) {
    return State(problem.atom_count(), problem.init);
}

State apply_outcome(StateView s, const GroundOutcome &outcome) {
    State next(s);
    for (AtomId a : outcome.del)
        next.reset(a);
    for (AtomId a : outcome.add)
        next.set(a);
    return next;
}
}
