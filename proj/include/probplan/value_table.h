#ifndef PROBPLAN_VALUE_TABLE_H
#define PROBPLAN_VALUE_TABLE_H

#include "state_store.h"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace probplan {
struct ValueEntry {
    double value = 0;
    bool solved = false;
    bool initialized = false;
    // Set once the dead-end test has run for this state.
    bool settled = false;
    bool dead = false;
    std::int32_t best_action = -1;
};

class ValueTable {
    std::vector<ValueEntry> entries_;

public:
    ValueEntry &operator[](StateRef s) {
        if (s.id >= entries_.size())
            entries_.resize(std::max<std::size_t>(s.id + 1, entries_.size() * 2));
        return entries_[s.id];
    }
    bool initialized(StateRef s) const {return s.id < entries_.size() && entries_[s.id].initialized;}
};
}

#endif
