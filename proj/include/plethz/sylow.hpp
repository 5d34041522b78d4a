#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "plethz/charalg.hpp"
#include "plethz/partition.hpp"

namespace plethz {

using zval = u128; // Z values at n = 64 exceed 64 bits

// Complete table of Z^lambda for all lambda |- n, indexed in reverse-lex
// enumeration order.
struct ZTable {
    uint32_t n = 0;
    std::vector<zval> values;
    std::string algo; // algorithm tag recorded in the cache file
    std::shared_ptr<PartitionRanker> ranker;

    zval at(const Partition& lam) const { return values[ranker->rank(lam)]; }
};

struct ZOptions {
    std::string cache_dir; // empty: no caching
    uint32_t jobs = 0;     // 0: hardware concurrency
    std::string algo = "thma-aggregated"; // or "plain-m2" (reference row-by-row pairing)
};

// Exact Z table for all partitions of n. Even layers double from n/2 through
// the m=2 deflation pairing; odd layers add one box (P_n = P_{n-1} x P_1).
// Layer tables are cached on disk when cache_dir is set.
ZTable z_table(uint32_t n, const ZOptions& opt = {});

// Single coefficient for arbitrary lambda through the binary expansion of
// |lambda|, using cached power-of-two layer tables.
zval z_value(const Partition& lam, const ZOptions& opt = {});

// Closed forms.
u64 z_closed_hook(const Partition& lam);            // binom(k-1, t)
u64 z_closed_two_column(const Partition& lam);      // 1 iff (2,...,2,eps)
u64 z_closed_near_hook(uint32_t size, uint32_t l);  // Z^{(size-l,2,1^{l-2})}, size even

// Statistics m_i, k(mu), N_i(mu) as exact rationals.
struct NStats {
    Partition mu;
    std::vector<i64> m_seq;   // m_1..m_imax
    std::vector<Rat> N_seq;   // N_0..N_imax
    Rat k;
};
NStats n_stats(const Partition& mu, uint32_t i_max);

i64 stat_m(uint32_t i); // m_i = (4^i + 8) / 6

// 2*N_i(mu): integer for all i >= 0 (the doubled recursion stays integral).
i64 n_stat_doubled(const Partition& mu, uint32_t i);

// Node weights a_i^{(j)}; weakly decreasing, eventually constant.
struct WeightSequence {
    std::vector<i64> a; // a_i^{(1)}, a_i^{(2)}, ...
    i64 limit;          // a_i^{(infinity)} = -m_i + 2
};
WeightSequence weight_sequence(uint32_t i, uint32_t len);

// N_i recomputed from the node weights (cross-check path).
i64 n_stat_from_weights(const Partition& mu, uint32_t i);

enum class ZeroTag {
    Tall,
    TwoColumn,
    Hook,
    NearHook,
    LengthHalf,
    ThreeColumn,
    InsideHalf,
    Ni,
    Unexplained,
};

struct ZeroReason {
    ZeroTag tag = ZeroTag::Unexplained;
    uint32_t level = 0; // i for Ni
    std::string detail;
};

std::string zero_tag_name(ZeroTag tag, uint32_t level = 0);

// First applicable certified-zero criterion, in fixed priority order
// (Tall, N_i, TwoColumn, Hook, NearHook, InsideHalf). Table-free.
std::optional<ZeroReason> certify_zero(const Partition& mu, uint32_t i_max = 6);

// Multiplicities of the doubled permutation character assembled from a table.
struct WreathSquareSummary {
    ZTable table;
    u128 pair_mult(const Partition& i, const Partition& j) const; // Z^i Z^j
    u128 diag_plus(const Partition& i) const;  // (Z^2 + Z)/2
    u128 diag_minus(const Partition& i) const; // (Z^2 - Z)/2
};
WreathSquareSummary wreath_square_multiplicities(const ZTable& zt);

// 2-core/2-quotient data with the sign of s_mu o p_2.
struct TwoQuotient {
    bool empty_core = false;
    int sign = 0;
    Partition q0, q1;
};
TwoQuotient two_quotient(const Partition& lam);

struct ClosureReport {
    uint32_t n = 0;
    u64 set_size = 0;      // |{Z >= 3}| at n
    u64 products = 0;      // |A * A|
    std::vector<Partition> violations;
    bool ok() const { return violations.empty(); }
};
ClosureReport check_geq3_closure(uint32_t n, const ZOptions& opt = {});

struct RectangleReport {
    uint32_t n = 0, k = 0;
    u64 box_size = 0;
    std::vector<Partition> missing;
    bool ok() const { return missing.empty(); }
};
RectangleReport check_rectangle_containment(uint32_t n, uint32_t k);

struct Cor142Report {
    uint32_t k = 0;
    u64 checked = 0;
    std::vector<Partition> violations;
    bool ok() const { return violations.empty(); }
};
Cor142Report check_cor_14_2(uint32_t k, const ZOptions& opt = {});

struct Conj2cReport {
    uint32_t k = 0;
    std::vector<Partition> found;     // lambda with min part >= 2 and Z = 0
    std::vector<Partition> predicted; // exceptional set from the conjecture
    bool matches() const { return found == predicted; }
};
Conj2cReport check_conjecture_2c(uint32_t k, const ZOptions& opt = {});

// Cache file IO: header "zcache v1 n=<n> algo=<tag>", one "<partition> <Z>"
// line per partition in enumeration order.
void save_z_cache(const ZTable& zt, const std::string& dir);
std::optional<ZTable> load_z_cache(uint32_t n, const std::string& dir,
                                   const std::string& expected_algo);
std::string z_cache_path(uint32_t n, const std::string& dir);

// Direct cycle-index pairing for one partition: Z^lambda as an exact integer
// sum over the classes of P_n, big-integer arithmetic inside. Independent of
// the layer tables; this is the engine behind the "oracle-pairing" algorithm,
// usable at any size (the character values grow past 128 bits near n = 64).
class SylowPairing {
    struct Impl;
    std::shared_ptr<Impl> impl_;

public:
    explicit SylowPairing(uint32_t n);
    uint32_t n() const;
    zval value(const Partition& lam) const; // one instance per worker thread
};

} // namespace plethz
