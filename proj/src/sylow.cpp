#include "plethz/sylow.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "plethz/memo.hpp"
#include "plethz/plethysm.hpp"

namespace plethz {

namespace {

uint32_t effective_jobs(uint32_t jobs) {
    if (jobs) return jobs;
    uint32_t hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

bool is_power_of_two(uint32_t n) { return n && !(n & (n - 1)); }

} // namespace

i64 stat_m(uint32_t i) {
    i64 m = 2;
    for (uint32_t t = 2; t <= i; ++t) m = 4 * (m - 1);
    return m;
}

i64 n_stat_doubled(const Partition& mu, uint32_t i) {
    // D_i = 2*N_i; D_0 = |mu|, D_i(mu) = 2*D_{i-1}(tilde(mu)) - m_i*(|mu| - 2 l(mu))
    std::vector<Partition> chain{mu};
    for (uint32_t j = 0; j < i; ++j) {
        const Partition& t = chain.back();
        chain.push_back(t.empty() ? Partition() : tilde(t));
    }
    std::vector<i64> d(i + 1);
    for (uint32_t j = 0; j <= i; ++j) d[j] = chain[j].size(); // D_0 of each
    for (uint32_t lvl = 1; lvl <= i; ++lvl) {
        i64 m = stat_m(lvl);
        // recompute in place: after this pass, d[j] = D_lvl(chain[j])
        for (uint32_t j = 0; j + lvl <= i; ++j) {
            const Partition& p = chain[j];
            i64 kk = (i64)p.size() - 2 * (i64)p.length();
            d[j] = checked_add(checked_mul((i64)2, d[j + 1]), -checked_mul(m, kk));
        }
    }
    return d[0];
}

NStats n_stats(const Partition& mu, uint32_t i_max) {
    if (mu.empty()) throw empty_partition("n_stats of empty partition");
    NStats st;
    st.mu = mu;
    st.k = Rat((i64)mu.size() - 2 * (i64)mu.length(), 2);
    for (uint32_t i = 1; i <= i_max; ++i) st.m_seq.push_back(stat_m(i));
    for (uint32_t i = 0; i <= i_max; ++i) st.N_seq.push_back(Rat(n_stat_doubled(mu, i), 2));
    return st;
}

WeightSequence weight_sequence(uint32_t i, uint32_t len) {
    if (i == 0) throw precondition_violated("weight_sequence: i >= 1");
    WeightSequence w;
    w.a.assign(len, 0);
    if (i == 1) {
        if (len) w.a[0] = 1;
        w.limit = 0;
        return w;
    }
    WeightSequence prev = weight_sequence(i - 1, len);
    i64 half_m = stat_m(i) / 2;
    if (len) w.a[0] = half_m;
    for (uint32_t j = 1; j < len; ++j) w.a[j] = 2 * prev.a[j - 1] - half_m;
    w.limit = -stat_m(i) + 2;
    return w;
}

i64 n_stat_from_weights(const Partition& mu, uint32_t i) {
    uint32_t need = 2 * std::max<uint32_t>(mu.first(), (uint32_t)mu.length()) + 2;
    WeightSequence w = weight_sequence(i, need);
    i64 total = 0;
    for (size_t r = 1; r <= mu.length(); ++r) {
        for (uint32_t c = 1; c <= mu[r - 1]; ++c) {
            size_t idx = (c <= r) ? (2 * c - 1) : (2 * r);
            total = checked_add(total, w.a[idx - 1]);
        }
    }
    return total;
}

u64 z_closed_hook(const Partition& lam) {
    if (!lam.is_hook() || lam.empty()) throw not_a_hook("z_closed_hook: " + lam.str());
    uint32_t n = lam.size();
    uint32_t t = (uint32_t)lam.length() - 1;
    uint32_t k = binary_digit_count(n);
    return binomial(k - 1, t);
}

u64 z_closed_two_column(const Partition& lam) {
    if (lam.first() > 2) throw precondition_violated("z_closed_two_column: lambda_1 > 2");
    if (lam.empty()) return 1;
    for (size_t i = 0; i + 1 < lam.length(); ++i)
        if (lam[i] != 2) return 0;
    return (lam[lam.length() - 1] <= 2) ? 1 : 0;
}

namespace {

std::map<std::pair<uint32_t, uint32_t>, u64> g_near_hook_cache;
std::mutex g_near_hook_mtx;

u64 near_hook_any(uint32_t size, uint32_t l); // Z^{lambda_{size,l}}, any size >= 4

u64 near_hook_even(uint32_t size, uint32_t l) {
    if (is_power_of_two(size)) {
        uint32_t r = 0;
        while ((1u << r) < size) ++r;
        return binomial(r - 1, l - 1);
    }
    uint32_t n = size / 2;
    uint32_t t = binary_digit_count(n);
    u64 total = binomial(t, l - 1);
    if (n >= 4 && l >= 2 && l <= n - 2) total = checked_add(total, near_hook_any(n, l));
    if (n >= 4 && l >= 3 && l - 1 <= n - 2) total = checked_add(total, near_hook_any(n, l - 1));
    return total;
}

u64 near_hook_any(uint32_t size, uint32_t l) {
    if (size < 4 || l < 2 || l > size - 2)
        throw precondition_violated("near hook shape out of range");
    {
        std::lock_guard<std::mutex> lock(g_near_hook_mtx);
        auto it = g_near_hook_cache.find({size, l});
        if (it != g_near_hook_cache.end()) return it->second;
    }
    u64 v;
    if (size % 2 == 0) {
        v = near_hook_even(size, l);
    } else {
        // odd base of the doubling recursion; oracle scale is small here
        std::vector<uint32_t> parts{size - l, 2};
        for (uint32_t i = 0; i + 2 < l; ++i) parts.push_back(1);
        v = sylow_branching_oracle(Partition(std::move(parts)), 32);
    }
    std::lock_guard<std::mutex> lock(g_near_hook_mtx);
    g_near_hook_cache[{size, l}] = v;
    return v;
}

} // namespace

u64 z_closed_near_hook(uint32_t size, uint32_t l) {
    if (size % 2) throw precondition_violated("z_closed_near_hook: size must be even");
    if (size < 4 || l < 2 || l > size - 2)
        throw precondition_violated("z_closed_near_hook: invalid (size, l)");
    return near_hook_any(size, l);
}

std::string zero_tag_name(ZeroTag tag, uint32_t level) {
    switch (tag) {
        case ZeroTag::Tall: return "tall";
        case ZeroTag::TwoColumn: return "two_column";
        case ZeroTag::Hook: return "hook";
        case ZeroTag::NearHook: return "near_hook";
        case ZeroTag::LengthHalf: return "length_half";
        case ZeroTag::ThreeColumn: return "three_column";
        case ZeroTag::InsideHalf: return "inside_half";
        case ZeroTag::Ni: return "n" + std::to_string(level);
        case ZeroTag::Unexplained: return "unexplained";
    }
    return "?";
}

std::optional<ZeroReason> certify_zero(const Partition& mu, uint32_t i_max) {
    if (mu.empty()) return std::nullopt;
    uint32_t n = mu.size();
    uint32_t l = (uint32_t)mu.length();

    // tall (Lemma: l > n/2 for even n, l > (n+1)/2 for odd n)
    uint32_t tall_bound = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    if (l > tall_bound)
        return ZeroReason{ZeroTag::Tall, 0,
                          "l=" + std::to_string(l) + " > " + std::to_string(tall_bound)};

    // N_i criteria, only when 2^i divides |mu|
    for (uint32_t i = 1; i <= i_max; ++i) {
        if (n % (1u << i)) continue;
        i64 d = n_stat_doubled(mu, i);
        if (d > (i64)n)
            return ZeroReason{ZeroTag::Ni, i,
                              "N_" + std::to_string(i) + "=" + Rat(d, 2).str() + " > " +
                                  std::to_string(n) + "/2"};
    }

    if (mu.first() <= 2 && z_closed_two_column(mu) == 0)
        return ZeroReason{ZeroTag::TwoColumn, 0, "not of the form (2,...,2,eps)"};

    if (mu.is_hook() && l >= 2 && z_closed_hook(mu) == 0)
        return ZeroReason{ZeroTag::Hook, 0,
                          "binom(" + std::to_string(binary_digit_count(n) - 1) + "," +
                              std::to_string(l - 1) + ") = 0"};

    if (n % 2 == 0 && n >= 4 && l >= 2 && mu[1] == 2 && mu[2] <= 1 && mu.first() >= 2 &&
        z_closed_near_hook(n, l) == 0)
        return ZeroReason{ZeroTag::NearHook, 0, "near-hook closed form vanishes"};

    // inside-partition boundary cases (n/2 even, l - |I| = n/4-level boundary)
    if (n % 4 == 0) {
        uint32_t half = n / 2;  // the paper's n with mu |- 2n
        Partition I = inside_partition(mu);
        if ((i64)l - (i64)I.size() == (i64)(half / 2) && l <= half) {
            uint32_t kk = half - l;
            uint32_t hi = (half + 3) / 4, lo = half / 4;
            if (kk > hi)
                return ZeroReason{ZeroTag::InsideHalf, 0,
                                  "k=" + std::to_string(kk) + " > ceil(n/4)"};
            if (I.first() <= 1 && kk != hi && kk != lo)
                return ZeroReason{ZeroTag::InsideHalf, 0, "column inside partition, k off boundary"};
            if (I.length() == 1 && binomial(binary_digit_count(half / 2), kk) == 0)
                return ZeroReason{ZeroTag::InsideHalf, 0, "row inside partition, binom vanishes"};
        }
    }
    return std::nullopt;
}

TwoQuotient two_quotient(const Partition& lam) {
    TwoQuotient q;
    size_t T = lam.length() + (lam.length() % 2);
    std::vector<i64> beta(T);
    for (size_t i = 0; i < T; ++i) beta[i] = (i64)lam[i] + (i64)(T - 1 - i);
    size_t evens = 0;
    for (i64 b : beta) evens += (b % 2 == 0);
    if (evens != T / 2) {
        q.empty_core = false;
        return q;
    }
    q.empty_core = true;
    // sign: repeatedly slide a beta number down by 2 (one domino each)
    int sign = 1;
    std::vector<char> present(lam.first() + T + 2, 0);
    for (i64 b : beta) present[b] = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (i64 b = (i64)present.size() - 1; b >= 2; --b) {
            if (present[b] && !present[b - 2]) {
                present[b] = 0;
                present[b - 2] = 1;
                if (present[b - 1]) sign = -sign;
                moved = true;
            }
        }
    }
    q.sign = sign;
    // quotients from the even and odd beta numbers
    std::vector<i64> ev, od;
    for (i64 b : beta)
        (b % 2 == 0 ? ev : od).push_back(b);
    std::sort(ev.rbegin(), ev.rend());
    std::sort(od.rbegin(), od.rend());
    auto to_partition = [](const std::vector<i64>& bs, bool odd) {
        size_t t = bs.size();
        std::vector<uint32_t> parts;
        for (size_t i = 0; i < t; ++i) {
            i64 v = (odd ? (bs[i] - 1) / 2 : bs[i] / 2) - (i64)(t - 1 - i);
            if (v > 0) parts.push_back((uint32_t)v);
        }
        return Partition::from_sorted(std::move(parts));
    };
    q.q0 = to_partition(ev, false);
    q.q1 = to_partition(od, true);
    return q;
}

u128 WreathSquareSummary::pair_mult(const Partition& i, const Partition& j) const {
    return checked_mul(table.at(i), table.at(j));
}
u128 WreathSquareSummary::diag_plus(const Partition& i) const {
    u128 z = table.at(i);
    return checked_mul(z, z + 1) / 2;
}
u128 WreathSquareSummary::diag_minus(const Partition& i) const {
    u128 z = table.at(i);
    return z ? checked_mul(z, z - 1) / 2 : 0;
}

WreathSquareSummary wreath_square_multiplicities(const ZTable& zt) {
    return WreathSquareSummary{zt};
}

// ---------------------------------------------------------------------------
// Layer construction
// ---------------------------------------------------------------------------

namespace {

// Reference even layer: the bare deflation pairing
// Z^mu = sum_theta a^mu_{theta,(2)} Z^theta row by row.
ZTable build_even_plain(const ZTable& lower, uint32_t jobs) {
    uint32_t m = lower.n, n2 = 2 * m;
    ZTable out;
    out.n = n2;
    out.algo = "plain-m2";
    out.ranker = std::make_shared<PartitionRanker>(n2);
    u64 total = out.ranker->count();
    out.values.assign(total, 0);
    std::vector<std::pair<Partition, zval>> nonzero;
    u64 cnt = lower.ranker->count();
    for (u64 r = 0; r < cnt; ++r)
        if (lower.values[r]) nonzero.emplace_back(lower.ranker->unrank(r), lower.values[r]);

    uint32_t nthreads = effective_jobs(jobs);
    std::atomic<u64> next{0};
    std::vector<std::thread> threads;
    auto worker = [&] {
        while (true) {
            u64 r = next.fetch_add(1);
            if (r >= total) break;
            Partition mu = out.ranker->unrank(r);
            if (mu.length() > m) continue;
            i128 z = 0;
            for (const auto& [theta, zt] : nonzero) {
                i64 a = pleth_m2(mu, theta);
                if (a) z = checked_add(z, checked_mul((i128)a, (i128)zt));
            }
            if (z < 0) throw negative_result("Z value negative");
            out.values[r] = (zval)z;
        }
    };
    for (uint32_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
}

// Aggregated Theorem A path (eq. 14.4 folded against the lower table):
//   Z^mu = sum_i (-1)^{k+i} sum_{sigma |- 2i, tau |- n-i} c^{muhat}_{tau,sigma,(k-i)} D(sigma,tau)
//   D(sigma,tau) = sum_{beta |- i} a^sigma_{beta',(2)} T(tau,beta)
//   T(tau,beta)  = sum_{lambda |- n} c^lambda_{tau,beta} Z_lower^{lambda'}
struct ThmAContext {
    const ZTable& lower;
    ConcurrentMemo<std::pair<Partition, Partition>, i128,
                   decltype([](const std::pair<Partition, Partition>& k) {
                       return hash_combine(PartitionHash{}(k.first), PartitionHash{}(k.second));
                   })> d_memo;

    explicit ThmAContext(const ZTable& lo) : lower(lo) {}

    i128 T(const Partition& tau, const Partition& beta) {
        i128 total = 0;
        lr_expand(tau, beta, [&](const Partition& lam) { total += lower.at(lam.conjugate()); });
        return total;
    }

    i128 D(const Partition& sigma, const Partition& tau) {
        auto key = std::make_pair(sigma, tau);
        if (auto v = d_memo.get(key)) return *v;
        uint32_t i = sigma.size() / 2;
        i128 total = 0;
        if (sigma.length() <= i || i == 0) {
            for (const auto& beta : partitions_of(i)) {
                i64 a = pleth_m2(sigma, beta.conjugate());
                if (a) total = checked_add(total, checked_mul((i128)a, T(tau, beta)));
            }
        }
        d_memo.put(key, total);
        return total;
    }

    zval value(const Partition& mu) {
        uint32_t n = lower.n;
        if (mu.length() > n) return 0;
        uint32_t k = n - (uint32_t)mu.length();
        Partition mu_hat = strip_first_column(mu, (uint32_t)mu.length());
        i128 acc = 0;
        for (uint32_t i = 0; i <= k; ++i) {
            int sign = ((k + i) % 2) ? -1 : 1;
            i128 term = 0;
            for_each_hstrip_removal(mu_hat, k - i, [&](const Partition& shape) {
                for_each_subpartition(shape, n - i, [&](const Partition& tau) {
                    for (const auto& [sigma, c] : lr_type_histogram(shape, tau)) {
                        if (sigma.length() > (size_t)i) continue;
                        i128 d = D(sigma, tau);
                        if (d) term = checked_add(term, checked_mul((i128)c, d));
                    }
                });
            });
            acc = checked_add(acc, (i128)sign * term);
        }
        if (acc < 0) throw negative_result("theorem-A layer: negative Z at " + mu.str());
        return (zval)acc;
    }
};

ZTable build_even_thma(const ZTable& lower, uint32_t jobs) {
    uint32_t n2 = 2 * lower.n;
    ZTable out;
    out.n = n2;
    out.algo = "thma-aggregated";
    out.ranker = std::make_shared<PartitionRanker>(n2);
    u64 total = out.ranker->count();
    out.values.assign(total, 0);
    ThmAContext ctx(lower);
    std::atomic<u64> next{0};
    uint32_t nthreads = effective_jobs(jobs);
    std::vector<std::thread> threads;
    auto worker = [&] {
        while (true) {
            u64 r = next.fetch_add(1);
            if (r >= total) break;
            out.values[r] = ctx.value(out.ranker->unrank(r));
        }
    };
    for (uint32_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
}

// P_n = P_{n-1} x P_1 for odd n: add one box.
ZTable build_odd_step(const ZTable& lower) {
    uint32_t n = lower.n + 1;
    ZTable out;
    out.n = n;
    out.algo = lower.algo;
    out.ranker = std::make_shared<PartitionRanker>(n);
    u64 total = out.ranker->count();
    out.values.assign(total, 0);
    for (u64 r = 0; r < total; ++r) {
        Partition lam = out.ranker->unrank(r);
        zval z = 0;
        // remove one corner box
        const auto& parts = lam.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
            std::vector<uint32_t> q(parts);
            q[i] -= 1;
            z = checked_add(z, lower.at(Partition::from_sorted(std::move(q))));
        }
        out.values[r] = z;
    }
    return out;
}

ZTable base_table() {
    ZTable out;
    out.n = 1;
    out.algo = "base";
    out.ranker = std::make_shared<PartitionRanker>(1);
    out.values = {1};
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Direct pairing against the cycle index (big-integer Murnaghan-Nakayama)
// ---------------------------------------------------------------------------

struct SylowPairing::Impl {
    uint32_t n = 0;
    uint32_t log_order = 0; // |P_n| = 2^log_order
    // classes as packed part-counts; parts are powers of two
    std::vector<std::vector<uint32_t>> class_parts; // sorted descending
    std::vector<BigInt> class_count;                // q_rho * |P_n|

    struct Key {
        u64 beta_lo, beta_hi; // beta set as a 128-bit bitmask
        u64 suffix;           // packed remaining part counts
        bool operator==(const Key& o) const {
            return beta_lo == o.beta_lo && beta_hi == o.beta_hi && suffix == o.suffix;
        }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            return hash_combine(k.beta_lo, hash_combine(k.beta_hi, k.suffix));
        }
    };
    std::unordered_map<Key, BigInt, KeyHash> memo;
    static constexpr size_t kMemoLimit = 1u << 22;

    explicit Impl(uint32_t nn) : n(nn), log_order(nn - binary_digit_count(nn)) {
        CycleIndex ci = cycle_index_sylow2(n);
        BigInt order = ci.group_order;
        for (const auto& [rho, q] : ci.coeffs) {
            class_parts.emplace_back(rho.parts());
            BigRat cnt = q * BigRat(order);
            if (denominator(cnt) != 1) throw non_integer_result("class count not integral");
            class_count.push_back(numerator(cnt));
        }
    }

    static u64 pack_suffix(const uint32_t* parts, size_t len) {
        u64 s = 0;
        for (size_t i = 0; i < len; ++i) {
            uint32_t bit = (uint32_t)__builtin_ctz(parts[i]);
            s += (u64)1 << (7 * bit); // 7-bit counter per power of two
        }
        return s;
    }

    // chi^lambda(remaining parts) with the beta set given as a bitmask of
    // 128 positions (enough for n = 64 with T <= 64 rows).
    BigInt chi(u64 lo, u64 hi, const uint32_t* parts, size_t len) {
        if (len == 0) return 1; // empty beta set consumed exactly
        Key key{lo, hi, pack_suffix(parts, len)};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        uint32_t r = parts[0];
        BigInt total = 0;
        auto test = [&](int pos) { return pos < 64 ? (lo >> pos) & 1 : (hi >> (pos - 64)) & 1; };
        for (int b = 127; b >= (int)r; --b) {
            if (!test(b) || test(b - r)) continue;
            int between = 0;
            for (int j = b - (int)r + 1; j < b; ++j) between += (int)test(j);
            u64 nlo = lo, nhi = hi;
            auto flip = [&](int pos) {
                if (pos < 64) nlo ^= (u64)1 << pos;
                else nhi ^= (u64)1 << (pos - 64);
            };
            flip(b);
            flip(b - (int)r);
            BigInt sub = chi(nlo, nhi, parts + 1, len - 1);
            if (between % 2) total -= sub;
            else total += sub;
        }
        if (memo.size() < kMemoLimit) memo.emplace(key, total);
        return total;
    }

    zval value(const Partition& lam) {
        // beta set with T = l(lam) rows, padded into the low bits
        size_t T = lam.length();
        u64 lo = 0, hi = 0;
        for (size_t i = 0; i < T; ++i) {
            u64 b = lam[i] + (T - 1 - i);
            if (b < 64) lo |= (u64)1 << b;
            else hi |= (u64)1 << (b - 64);
        }
        // normalize: strips below the lowest occupied position don't exist; the
        // recursion only moves bits down, and bit 0..T-1 occupancy encodes the
        // empty partition as {T-1,...,0}; chi() handles everything uniformly,
        // but the terminal check needs len == 0, so nothing else here.
        BigInt acc = 0;
        for (size_t c = 0; c < class_parts.size(); ++c) {
            BigInt v = chi(lo, hi, class_parts[c].data(), class_parts[c].size());
            if (v != 0) acc += class_count[c] * v;
        }
        if (memo.size() >= kMemoLimit) memo.clear();
        if (acc < 0) throw negative_result("oracle pairing: negative multiplicity");
        BigInt z = acc >> log_order;
        if ((z << log_order) != acc)
            throw non_integer_result("oracle pairing: non-integral multiplicity");
        BigInt cap = BigInt(1) << 127;
        if (z >= cap) throw overflow("Z value exceeds 128 bits");
        BigInt zhi = z >> 64, zlo = z & BigInt(0xffffffffffffffffull);
        return ((u128)zhi.convert_to<unsigned long long>() << 64) |
               (u128)zlo.convert_to<unsigned long long>();
    }
};

SylowPairing::SylowPairing(uint32_t n) : impl_(std::make_shared<Impl>(n)) {}
uint32_t SylowPairing::n() const { return impl_->n; }
zval SylowPairing::value(const Partition& lam) const { return impl_->value(lam); }


namespace {

// Checkpointed build through the direct pairing; resumable via a partial file
// of "<rank> <value>" lines in the cache directory.
ZTable build_oracle_layer(uint32_t n, uint32_t jobs, const std::string& cache_dir) {
    ZTable out;
    out.n = n;
    out.algo = "oracle-pairing";
    out.ranker = std::make_shared<PartitionRanker>(n);
    u64 total = out.ranker->count();
    out.values.assign(total, 0);
    std::vector<char> done(total, 0);
    u64 remaining = total;

    std::string partial = cache_dir.empty() ? "" : cache_dir + "/z" + std::to_string(n) + ".partial";
    if (!partial.empty()) {
        std::ifstream f(partial);
        u64 r;
        std::string vstr;
        while (f >> r >> vstr) {
            if (r < total && !done[r]) {
                out.values[r] = parse_u128(vstr);
                done[r] = 1;
                --remaining;
            }
        }
    }

    std::mutex io_mtx;
    std::ofstream partial_out;
    if (!partial.empty()) {
        std::filesystem::create_directories(cache_dir);
        partial_out.open(partial, std::ios::app);
    }

    constexpr u64 kChunk = 2048;
    std::atomic<u64> next_chunk{0};
    u64 chunks = (total + kChunk - 1) / kChunk;
    uint32_t nthreads = effective_jobs(jobs);
    std::vector<std::thread> threads;
    std::atomic<u64> progress{total - remaining};
    auto worker = [&] {
        SylowPairing pairing(n);
        std::vector<std::pair<u64, zval>> buf;
        while (true) {
            u64 c = next_chunk.fetch_add(1);
            if (c >= chunks) break;
            buf.clear();
            u64 lo = c * kChunk, hi = std::min(total, lo + kChunk);
            for (u64 r = lo; r < hi; ++r) {
                if (done[r]) continue;
                zval v = pairing.value(out.ranker->unrank(r));
                out.values[r] = v;
                buf.emplace_back(r, v);
            }
            if (!buf.empty() && partial_out.is_open()) {
                std::lock_guard<std::mutex> lock(io_mtx);
                for (auto& [r, v] : buf) partial_out << r << " " << u128_to_string(v) << "\n";
                partial_out.flush();
            }
            u64 p = progress.fetch_add(hi - lo) + (hi - lo);
            if (n >= 48 && (c % 64 == 0)) {
                std::lock_guard<std::mutex> lock(io_mtx);
                std::cerr << "oracle-pairing n=" << n << ": ~" << p << "/" << total << "\n";
            }
        }
    };
    for (uint32_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (!partial.empty()) {
        partial_out.close();
        std::filesystem::remove(partial);
    }
    return out;
}

} // namespace

std::string z_cache_path(uint32_t n, const std::string& dir) {
    return dir + "/z" + std::to_string(n) + ".zcache";
}

void save_z_cache(const ZTable& zt, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::string path = z_cache_path(zt.n, dir);
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw error("cannot write cache file " + tmp);
        f << "zcache v1 n=" << zt.n << " algo=" << zt.algo << "\n";
        u64 total = zt.ranker->count();
        for (u64 r = 0; r < total; ++r)
            f << zt.ranker->unrank(r).str() << " " << u128_to_string(zt.values[r]) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::optional<ZTable> load_z_cache(uint32_t n, const std::string& dir,
                                   const std::string& expected_algo) {
    std::string path = z_cache_path(n, dir);
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::string header;
    if (!std::getline(f, header)) throw cache_corruption("empty cache file " + path);
    std::string expected_header =
        "zcache v1 n=" + std::to_string(n) + " algo=" + expected_algo;
    if (header != expected_header) {
        if (header.rfind("zcache ", 0) != 0)
            throw cache_corruption("bad cache header in " + path);
        return std::nullopt; // version or algorithm mismatch: recompute
    }
    ZTable out;
    out.n = n;
    out.algo = expected_algo;
    out.ranker = std::make_shared<PartitionRanker>(n);
    u64 total = out.ranker->count();
    out.values.assign(total, 0);
    std::string pstr, vstr;
    for (u64 r = 0; r < total; ++r) {
        if (!(f >> pstr >> vstr)) throw cache_corruption("truncated cache file " + path);
        Partition p = parse_partition(pstr);
        if (out.ranker->rank(p) != r)
            throw cache_corruption("cache " + path + " out of enumeration order at " + pstr);
        try {
            out.values[r] = parse_u128(vstr);
        } catch (const parse_error&) {
            throw cache_corruption("bad value in cache " + path + " at " + pstr);
        }
    }
    return out;
}

ZTable z_table(uint32_t n, const ZOptions& opt) {
    if (n == 0) throw precondition_violated("z_table: n >= 1");
    std::string algo_tag = (n == 1) ? "base"
                           : (opt.algo == "oracle-pairing") ? opt.algo
                           : (n % 2) ? "odd-step"
                                     : opt.algo;
    if (!opt.cache_dir.empty()) {
        if (auto cached = load_z_cache(n, opt.cache_dir, algo_tag)) return *cached;
    }
    ZTable out;
    if (n == 1) {
        out = base_table();
    } else if (opt.algo == "oracle-pairing") {
        out = build_oracle_layer(n, opt.jobs, opt.cache_dir);
    } else if (n % 2) {
        ZTable lower = z_table(n - 1, opt);
        out = build_odd_step(lower);
        out.algo = algo_tag;
    } else {
        ZTable lower = z_table(n / 2, opt);
        out = (opt.algo == "plain-m2") ? build_even_plain(lower, opt.jobs)
                                       : build_even_thma(lower, opt.jobs);
    }
    if (!opt.cache_dir.empty()) save_z_cache(out, opt.cache_dir);
    return out;
}

namespace {

// g_i recursion over the binary expansion for a single lambda.
zval z_value_binary(const Partition& lam, const ZOptions& opt) {
    uint32_t n = lam.size();
    std::vector<uint32_t> blocks; // power-of-two summands, descending
    for (int b = 31; b >= 0; --b)
        if (n & (1u << b)) blocks.push_back(1u << b);
    std::vector<ZTable> tables;
    for (uint32_t b : blocks) tables.push_back(z_table(b, opt));

    std::map<Partition, i128> cur;
    cur[Partition()] = 1;
    uint32_t placed = 0;
    for (size_t t = 0; t < blocks.size(); ++t) {
        placed += blocks[t];
        std::map<Partition, i128> next;
        bool last = (t + 1 == blocks.size());
        for (const auto& [tau, w] : cur) {
            if (last) {
                // only lambda matters at the top level
                if (!lam.contains(tau)) continue;
                i128 inner = 0;
                for (const auto& [mu, c] : lr_type_histogram(lam, tau)) {
                    zval z = tables[t].at(mu);
                    if (z) inner = checked_add(inner, checked_mul((i128)c, (i128)z));
                }
                if (inner) {
                    auto& slot = next[lam];
                    slot = checked_add(slot, checked_mul(w, inner));
                }
            } else {
                for_each_subpartition(lam, placed, [&](const Partition& tau2) {
                    if (!tau2.contains(tau)) return;
                    i128 inner = 0;
                    for (const auto& [mu, c] : lr_type_histogram(tau2, tau)) {
                        zval z = tables[t].at(mu);
                        if (z) inner = checked_add(inner, checked_mul((i128)c, (i128)z));
                    }
                    if (inner) {
                        auto& slot = next[tau2];
                        slot = checked_add(slot, checked_mul(w, inner));
                    }
                });
            }
        }
        cur.swap(next);
        if (cur.empty()) return 0;
    }
    i128 v = cur.count(lam) ? cur[lam] : 0;
    if (v < 0) throw negative_result("z_value negative");
    return (zval)v;
}

} // namespace

zval z_value(const Partition& lam, const ZOptions& opt) {
    if (lam.empty()) return 1;
    uint32_t n = lam.size();
    if (is_power_of_two(n)) return z_table(n, opt).at(lam);
    return z_value_binary(lam, opt);
}

ClosureReport check_geq3_closure(uint32_t n, const ZOptions& opt) {
    ClosureReport rep;
    rep.n = n;
    ZTable zt = z_table(n, opt);
    ZTable zt2 = z_table(2 * n, opt);
    std::set<Partition> A;
    u64 cnt = zt.ranker->count();
    for (u64 r = 0; r < cnt; ++r)
        if (zt.values[r] >= 3) A.insert(zt.ranker->unrank(r));
    rep.set_size = A.size();
    if (A.empty()) return rep;
    std::set<Partition> prod = star_product(A, A);
    rep.products = prod.size();
    for (const auto& mu : prod)
        if (zt2.at(mu) < 3) rep.violations.push_back(mu);
    return rep;
}

RectangleReport check_rectangle_containment(uint32_t n, uint32_t k) {
    if (n < 4 || k < 2) throw precondition_violated("rectangle check needs n >= 4, k >= 2");
    RectangleReport rep;
    rep.n = n;
    rep.k = k;
    std::set<Partition> power{Partition{2 * n - 2, 2}};
    for (uint32_t t = 1; t < k; ++t)
        power = star_product(power, std::set<Partition>{Partition{2 * n - 2, 2}});
    auto box = partitions_in_box(2 * k * n, (k + 1) * n, k);
    rep.box_size = box.size();
    for (const auto& mu : box)
        if (!power.count(mu)) rep.missing.push_back(mu);
    return rep;
}

Cor142Report check_cor_14_2(uint32_t k, const ZOptions& opt) {
    if (k < 3) throw precondition_violated("Cor (14,2) check needs k >= 3");
    Cor142Report rep;
    rep.k = k;
    for (const auto& mu : partitions_in_box(16 * k, 8 * (k + 1), k)) {
        ++rep.checked;
        if (z_value(mu, opt) < 3) rep.violations.push_back(mu);
    }
    return rep;
}

Conj2cReport check_conjecture_2c(uint32_t k, const ZOptions& opt) {
    Conj2cReport rep;
    rep.k = k;
    uint32_t n = 1u << k;
    ZTable zt = z_table(n, opt);
    u64 cnt = zt.ranker->count();
    for (u64 r = 0; r < cnt; ++r) {
        if (zt.values[r]) continue;
        Partition lam = zt.ranker->unrank(r);
        if (!lam.empty() && lam[lam.length() - 1] >= 2) rep.found.push_back(lam);
    }
    if (n == 8) {
        rep.predicted = {Partition{5, 3}, Partition{3, 3, 2}};
    } else if (k >= 3) {
        std::vector<uint32_t> parts{3, 3};
        for (uint32_t i = 0; i < n / 2 - 3; ++i) parts.push_back(2);
        rep.predicted = {Partition(std::move(parts))};
    }
    std::sort(rep.found.begin(), rep.found.end());
    std::sort(rep.predicted.begin(), rep.predicted.end());
    return rep;
}

} // namespace plethz
