#ifndef PROBPLAN_STATE_H
#define PROBPLAN_STATE_H

#include "ground_problem.h"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace probplan {
std::size_t words_for(std::size_t atom_count);

// Read-only window onto packed state bits, e.g. into the store's arena.
class StateView {
    const std::uint64_t *words_ = nullptr;
    std::size_t width_ = 0;

public:
    StateView() = default;
    StateView(const std::uint64_t *words, std::size_t width) : words_(words), width_(width) {}

    bool test(AtomId atom) const {return (words_[atom >> 6] >> (atom & 63)) & 1;}
    const std::uint64_t *words() const {return words_;}
    std::size_t width() const {return width_;}
    std::vector<AtomId> atoms() const;
};

// A set of true atoms, stored as a fixed-width bitset.
class State {
    std::vector<std::uint64_t> words_;

public:
    State() = default;
    explicit State(std::size_t atom_count) : words_(words_for(atom_count), 0) {}
    State(std::size_t atom_count, const std::vector<AtomId> &atoms);
    explicit State(StateView view) : words_(view.words(), view.words() + view.width()) {}

    bool test(AtomId atom) const {return (words_[atom >> 6] >> (atom & 63)) & 1;}
    void set(AtomId atom) {words_[atom >> 6] |= std::uint64_t(1) << (atom & 63);}
    void reset(AtomId atom) {words_[atom >> 6] &= ~(std::uint64_t(1) << (atom & 63));}

    StateView view() const {return StateView(words_.data(), words_.size());}
    std::vector<AtomId> atoms() const {return view().atoms();}
    const std::vector<std::uint64_t> &words() const {return words_;}

    bool operator==(const State &other) const = default;
};

std::uint64_t hash64(const std::uint64_t *words, std::size_t width);
inline std::uint64_t hash64(const State &s) {return hash64(s.words().data(), s.words().size());}

bool contains_all(StateView s, const std::vector<AtomId> &atoms);
bool contains_none(StateView s, const std::vector<AtomId> &atoms);
bool is_goal(const GroundProblem &problem, StateView s);
bool is_applicable(const GroundOperator &op, StateView s);

// Applicable operators in ascending id order.
std::vector<OpId> applicable(const GroundProblem &problem, StateView s);
State initial_state(const GroundProblem &problem);
State apply_outcome(StateView s, const GroundOutcome &outcome);
}

template<>
struct std::hash<probplan::State> {
    std::size_t operator()(const probplan::State &s) const {return probplan::hash64(s);}
};

#endif
