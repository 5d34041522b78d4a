#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>

namespace plethz {

// Sharded memo cache, shareable across workers. Values for a given key are
// always identical, so concurrent insertion is last-writer-wins.
template <class Key, class Value, class Hash>
class ConcurrentMemo {
    static constexpr size_t kShards = 64;
    struct Shard {
        std::mutex mtx;
        std::unordered_map<Key, Value, Hash> map;
    };
    Shard shards_[kShards];

    Shard& shard_for(const Key& k) { return shards_[Hash{}(k) % kShards]; }

public:
    std::optional<Value> get(const Key& k) {
        Shard& s = shard_for(k);
        std::lock_guard<std::mutex> lock(s.mtx);
        auto it = s.map.find(k);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }

    void put(const Key& k, const Value& v) {
        Shard& s = shard_for(k);
        std::lock_guard<std::mutex> lock(s.mtx);
        s.map.emplace(k, v);
    }

    void clear() {
        for (auto& s : shards_) {
            std::lock_guard<std::mutex> lock(s.mtx);
            s.map.clear();
        }
    }

    size_t size() {
        size_t total = 0;
        for (auto& s : shards_) {
            std::lock_guard<std::mutex> lock(s.mtx);
            total += s.map.size();
        }
        return total;
    }
};

inline size_t hash_combine(size_t a, size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

} // namespace plethz
