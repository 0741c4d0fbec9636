#ifndef PROBPLAN_STATE_STORE_H
#define PROBPLAN_STATE_STORE_H

#include "state.h"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace probplan {
struct StateRef {
    std::uint32_t id = 0;

    auto operator<=>(const StateRef &) const = default;
};

struct StoreStatistics {
    std::size_t size = 0;
    std::size_t buckets = 0;
    std::size_t occupied_buckets = 0;
    std::size_t max_chain = 0;
    double mean_chain = 0;
    std::size_t rehashes = 0;
};

std::size_t next_prime(std::size_t n);

/*
  The system-wide state table. Each distinct state is stored once in an
  append-only arena; the index is a separately chained hash table whose
  bucket count is always prime. References and views stay valid for the
  lifetime of the store.
*/
class StateStore {
    static constexpr std::size_t block_states = 4096;
    static constexpr std::uint32_t nil = 0xffffffffu;

    std::size_t width_;
    std::vector<std::unique_ptr<std::uint64_t[]>> blocks_;
    std::vector<std::uint64_t> hashes_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> heads_;
    std::size_t rehashes_ = 0;

    std::uint64_t *slot(std::uint32_t id) const {
        return blocks_[id / block_states].get() + (id % block_states) * width_;
    }
    bool equal(std::uint32_t id, const std::uint64_t *words) const;
    void grow();

public:
    explicit StateStore(std::size_t atom_count, std::size_t size_hint = 49999);

    StateRef intern(const State &s);
    StateRef intern(StateView s);
    StateView view(StateRef ref) const {return StateView(slot(ref.id), width_);}
    State get(StateRef ref) const {return State(view(ref));}

    std::size_t size() const {return hashes_.size();}
    std::size_t bucket_count() const {return heads_.size();}
    StoreStatistics statistics() const;
};
}

template<>
struct std::hash<probplan::StateRef> {
    std::size_t operator()(probplan::StateRef r) const {return r.id;}
};

#endif
