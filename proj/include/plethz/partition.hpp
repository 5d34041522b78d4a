#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "plethz/errors.hpp"
#include "plethz/ints.hpp"

namespace plethz {

// Weakly decreasing sequence of positive integers. Canonical form (sorted,
// no zeros) is enforced at construction; everything downstream assumes it.
class Partition {
    std::vector<uint32_t> parts_;

public:
    Partition() = default;
    explicit Partition(std::vector<uint32_t> parts);
    Partition(std::initializer_list<uint32_t> parts)
        : Partition(std::vector<uint32_t>(parts)) {}

    // Construct from data already in canonical form (hot paths).
    static Partition from_sorted(std::vector<uint32_t> parts);

    const std::vector<uint32_t>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    uint32_t size() const;                       // |lambda|
    uint32_t operator[](size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    uint32_t first() const { return parts_.empty() ? 0 : parts_[0]; }

    bool contains(const Partition& inner) const; // componentwise
    bool is_hook() const;                        // (a, 1^b), including (n) and (1^n)
    bool all_parts_even() const;
    bool all_parts_odd() const;

    Partition conjugate() const;

    // Lexicographic total order (map keys, output ordering).
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

    std::string str() const;                     // "[3,1]", "[]"
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t v : p.parts()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Partition parse_partition(const std::string& text);

Partition add(const Partition& a, const Partition& b);            // componentwise +
Partition disjoint_union(const Partition& a, const Partition& b); // multiset union of parts

// 180-degree rotation of the complement inside a w x h box.
Partition rect_complement(const Partition& lam, uint32_t w, uint32_t h);

Partition inside_partition(const Partition& mu); // I(mu): drop first row and column
Partition tilde(const Partition& mu);            // (mu - (1^l))'

// mu - (1^k) for k <= l(mu); throws shape_not_contained if some part would go negative.
Partition strip_first_column(const Partition& mu, uint32_t k);

uint32_t binary_digit_count(uint64_t n);         // ones in the binary expansion, n >= 1

u64 binomial(uint32_t n, uint32_t k);            // 0 when k > n

// Outer/inner pair with containment.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in);
    uint32_t size() const { return outer.size() - inner.size(); }
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        if (a.outer != b.outer) return a.outer < b.outer;
        return a.inner < b.inner;
    }
    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }
};

// Partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
// Callback returns false to stop early.
void for_each_partition(uint32_t n, const std::function<bool(const Partition&)>& f);

std::vector<Partition> partitions_of(uint32_t n);
std::vector<Partition> partitions_of(uint32_t n,
                                     const std::function<bool(const Partition&)>& pred);

// All partitions of n fitting in a w x h box (B_{w,h}(n)).
std::vector<Partition> partitions_in_box(uint32_t n, uint32_t w, uint32_t h);

u64 partition_count(uint32_t n);

// Rank/unrank in the reverse-lexicographic enumeration of P(n), O(l) per query.
class PartitionRanker {
    uint32_t n_;
    std::vector<std::vector<u64>> cnt_; // cnt_[m][k] = #partitions of m with parts <= k
public:
    explicit PartitionRanker(uint32_t n);
    uint32_t n() const { return n_; }
    u64 count() const { return cnt_[n_][n_]; }
    u64 rank(const Partition& p) const;
    Partition unrank(u64 r) const;
};

// Subpartitions of lam with given size, ascending lex order of emission.
void for_each_subpartition(const Partition& lam, uint32_t size,
                           const std::function<void(const Partition&)>& f);

} // namespace plethz
