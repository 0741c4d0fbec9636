#include "probplan/state_store.h"

#include "probplan/errors.h"

#include <algorithm>
#include <cstring>
#include <limits>

using namespace std;

namespace probplan {
namespace {
bool is_prime(size_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (size_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}
}

size_t next_prime(size_t n) {
    while (!is_prime(n))
        ++n;
    return n;
}

StateStore::StateStore(size_t atom_count, size_t size_hint)
    : width_(words_for(atom_count)), heads_(next_prime(max<size_t>(size_hint, 2)), nil) {
}

bool StateStore::equal(uint32_t id, const uint64_t *words) const {
    return width_ == 0 || memcmp(slot(id), words, width_ * sizeof(uint64_t)) == 0;
}

void StateStore::grow() {
    size_t buckets = next_prime(2 * heads_.size());
    heads_.assign(buckets, nil);
    // Reinserting in id order keeps each chain sorted newest-first, as before.
    for (uint32_t id = 0; id < hashes_.size(); ++id) {
        size_t b = hashes_[id] % buckets;
        next_[id] = heads_[b];
        heads_[b] = id;
    }
    ++rehashes_;
}

StateRef StateStore::intern(const State &s) {
    return intern(s.view());
}

StateRef StateStore::intern(StateView s) {
    uint64_t h = hash64(s.words(), width_);
    size_t b = h % heads_.size();
    for (uint32_t id = heads_[b]; id != nil; id = next_[id])
        if (hashes_[id] == h && equal(id, s.words()))
            return StateRef{id};

    if (hashes_.size() >= numeric_limits<uint32_t>::max() - 1)
        throw CapacityExceeded("state store is full");
    uint32_t id = static_cast<uint32_t>(hashes_.size());
    if (id % block_states == 0)
        blocks_.push_back(make_unique<uint64_t[]>(block_states * max<size_t>(width_, 1)));
    if (width_)
        memcpy(slot(id), s.words(), width_ * sizeof(uint64_t));
    hashes_.push_back(h);
    next_.push_back(heads_[b]);
    heads_[b] = id;
    if (hashes_.size() > 0.75 * heads_.size())
        grow();
    return StateRef{id};
}

StoreStatistics StateStore::statistics() const {
    StoreStatistics stats;
    stats.size = size();
    stats.buckets = bucket_count();
    stats.rehashes = rehashes_;
    for (uint32_t head : heads_) {
        size_t length = 0;
        for (uint32_t id = head; id != nil; id = next_[id])
            ++length;
        if (length) {
            ++stats.occupied_buckets;
            stats.max_chain = max(stats.max_chain, length);
        }
    }
    if (stats.occupied_buckets)
        stats.mean_chain = double(stats.size) / stats.occupied_buckets;
    return stats;
}
}
