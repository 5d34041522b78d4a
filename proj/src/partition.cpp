#include "plethz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace plethz {

Rat::Rat(i64 n, i64 d) {
    if (d == 0) throw error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
}

Rat operator+(Rat a, Rat b) { return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)), checked_mul(a.den, b.den)); }
Rat operator-(Rat a, Rat b) { return Rat(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)), checked_mul(a.den, b.den)); }
Rat operator*(Rat a, Rat b) { return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den)); }
bool operator<(const Rat& a, const Rat& b) { return checked_mul(a.num, b.den) < checked_mul(b.num, a.den); }

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Partition::Partition(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<uint32_t>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::from_sorted(std::vector<uint32_t> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    while (!p.parts_.empty() && p.parts_.back() == 0) p.parts_.pop_back();
    return p;
}

uint32_t Partition::size() const {
    uint32_t s = 0;
    for (uint32_t v : parts_) s += v;
    return s;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::is_hook() const {
    return parts_.size() <= 1 || parts_[1] <= 1;
}

bool Partition::all_parts_even() const {
    for (uint32_t v : parts_) if (v % 2) return false;
    return true;
}

bool Partition::all_parts_odd() const {
    for (uint32_t v : parts_) if (v % 2 == 0) return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<uint32_t> c(parts_[0], 0);
    for (uint32_t v : parts_)
        for (uint32_t j = 0; j < v; ++j) c[j]++;
    return Partition::from_sorted(std::move(c));
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition parse_partition(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i >= n || text[i] != '[') throw parse_error("partition must start with '[': " + text);
    ++i;
    std::vector<uint32_t> parts;
    skip();
    if (i < n && text[i] == ']') { ++i; skip(); }
    else {
        while (true) {
            skip();
            size_t j = i;
            while (j < n && isdigit((unsigned char)text[j])) ++j;
            if (j == i) throw parse_error("expected number in partition: " + text);
            unsigned long v = std::stoul(text.substr(i, j - i));
            if (v == 0 || v > 0xffffffffull) throw parse_error("part out of range: " + text);
            parts.push_back((uint32_t)v);
            i = j;
            skip();
            if (i < n && text[i] == ',') { ++i; continue; }
            if (i < n && text[i] == ']') { ++i; break; }
            throw parse_error("malformed partition: " + text);
        }
        skip();
    }
    if (i != n) throw parse_error("trailing characters after partition: " + text);
    for (size_t t = 1; t < parts.size(); ++t)
        if (parts[t] > parts[t - 1]) throw parse_error("parts must be weakly decreasing: " + text);
    return Partition::from_sorted(std::move(parts));
}

Partition add(const Partition& a, const Partition& b) {
    std::vector<uint32_t> out(std::max(a.length(), b.length()));
    for (size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return Partition::from_sorted(std::move(out));
}

Partition disjoint_union(const Partition& a, const Partition& b) {
    std::vector<uint32_t> out;
    out.reserve(a.length() + b.length());
    out.insert(out.end(), a.parts().begin(), a.parts().end());
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    std::sort(out.begin(), out.end(), std::greater<uint32_t>());
    return Partition::from_sorted(std::move(out));
}

Partition rect_complement(const Partition& lam, uint32_t w, uint32_t h) {
    if (lam.length() > h || lam.first() > w)
        throw shape_not_contained(lam.str() + " not contained in " + std::to_string(w) + "x" + std::to_string(h) + " box");
    std::vector<uint32_t> out(h);
    for (uint32_t i = 0; i < h; ++i) out[i] = w - lam[h - 1 - i];
    return Partition::from_sorted(std::move(out));
}

Partition inside_partition(const Partition& mu) {
    if (mu.empty()) throw empty_partition("inside_partition of empty partition");
    std::vector<uint32_t> out;
    for (size_t i = 1; i < mu.length(); ++i)
        if (mu[i] > 1) out.push_back(mu[i] - 1);
    return Partition::from_sorted(std::move(out));
}

Partition tilde(const Partition& mu) {
    if (mu.empty()) throw empty_partition("tilde of empty partition");
    std::vector<uint32_t> out;
    for (uint32_t v : mu.parts())
        if (v > 1) out.push_back(v - 1);
    return Partition::from_sorted(std::move(out)).conjugate();
}

Partition strip_first_column(const Partition& mu, uint32_t k) {
    if (k > mu.length()) throw shape_not_contained("cannot subtract (1^" + std::to_string(k) + ") from " + mu.str());
    std::vector<uint32_t> out(mu.parts());
    for (uint32_t i = 0; i < k; ++i) out[i] -= 1;
    // still weakly decreasing: rows 0..k-1 each lost one box
    return Partition::from_sorted(std::move(out));
}

uint32_t binary_digit_count(uint64_t n) {
    return (uint32_t)__builtin_popcountll(n);
}

u64 binomial(uint32_t n, uint32_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u64 r = 1;
    for (uint32_t i = 1; i <= k; ++i)
        r = checked_mul(r, n - k + i) / i;
    return r;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner))
        throw shape_not_contained(inner.str() + " not contained in " + outer.str());
}

void for_each_partition(uint32_t n, const std::function<bool(const Partition&)>& f) {
    if (n == 0) {
        f(Partition());
        return;
    }
    std::vector<uint32_t> a{n};
    while (true) {
        if (!f(Partition::from_sorted(std::vector<uint32_t>(a)))) return;
        // next partition in descending lex order
        size_t i = a.size();
        while (i > 0 && a[i - 1] == 1) --i;
        if (i == 0) return;
        uint32_t rem = (uint32_t)(a.size() - i) + a[i - 1];
        uint32_t v = a[i - 1] - 1;
        a.resize(i - 1);
        while (rem > 0) {
            uint32_t take = std::min(v, rem);
            a.push_back(take);
            rem -= take;
        }
    }
}

std::vector<Partition> partitions_of(uint32_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Partition> partitions_of(uint32_t n, const std::function<bool(const Partition&)>& pred) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (pred(p)) out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Partition> partitions_in_box(uint32_t n, uint32_t w, uint32_t h) {
    return partitions_of(n, [&](const Partition& p) {
        return p.first() <= w && p.length() <= h;
    });
}

u64 partition_count(uint32_t n) {
    // parts-bounded DP, independent of the enumerator
    std::vector<u64> dp(n + 1, 0);
    dp[0] = 1;
    for (uint32_t k = 1; k <= n; ++k)
        for (uint32_t m = k; m <= n; ++m)
            dp[m] = checked_add(dp[m], dp[m - k]);
    return dp[n];
}

PartitionRanker::PartitionRanker(uint32_t n) : n_(n), cnt_(n + 1, std::vector<u64>(n + 1, 0)) {
    for (uint32_t k = 0; k <= n; ++k) cnt_[0][k] = 1;
    for (uint32_t m = 1; m <= n; ++m)
        for (uint32_t k = 1; k <= n; ++k) {
            cnt_[m][k] = cnt_[m][k - 1];
            if (k <= m) cnt_[m][k] = checked_add(cnt_[m][k], cnt_[m - k][std::min(k, m - k)]);
        }
}

u64 PartitionRanker::rank(const Partition& p) const {
    // number of partitions strictly greater in lex order
    u64 r = 0;
    uint32_t rem = n_;
    uint32_t prev = n_;
    for (size_t i = 0; i < p.length(); ++i) {
        uint32_t pi = p[i];
        uint32_t hi = std::min(prev, rem);
        for (uint32_t v = pi + 1; v <= hi; ++v)
            r += cnt_[rem - v][std::min(v, rem - v)];
        rem -= pi;
        prev = pi;
    }
    return r;
}

Partition PartitionRanker::unrank(u64 r) const {
    std::vector<uint32_t> parts;
    uint32_t rem = n_;
    uint32_t prev = n_;
    while (rem > 0) {
        uint32_t v = std::min(prev, rem);
        while (true) {
            u64 c = cnt_[rem - v][std::min(v, rem - v)];
            if (r < c) break;
            r -= c;
            --v;
        }
        parts.push_back(v);
        rem -= v;
        prev = v;
    }
    return Partition::from_sorted(std::move(parts));
}

namespace {
void subpartition_rec(const std::vector<uint32_t>& lam, size_t row, uint32_t prev,
                      uint32_t need, std::vector<uint32_t>& cur,
                      const std::function<void(const Partition&)>& f) {
    if (need == 0) {
        f(Partition::from_sorted(std::vector<uint32_t>(cur)));
        return;
    }
    if (row >= lam.size()) return;
    // max total still placeable in remaining rows
    uint32_t cap = 0;
    for (size_t i = row; i < lam.size(); ++i) cap += std::min(lam[i], prev);
    if (cap < need) return;
    uint32_t hi = std::min({lam[row], prev, need});
    for (uint32_t v = hi + 1; v-- > 0;) {
        if (v == 0) {
            // all later rows zero too
            return;
        }
        cur.push_back(v);
        subpartition_rec(lam, row + 1, v, need - v, cur, f);
        cur.pop_back();
    }
}
} // namespace

void for_each_subpartition(const Partition& lam, uint32_t size,
                           const std::function<void(const Partition&)>& f) {
    if (size > lam.size()) return;
    if (size == 0) {
        f(Partition());
        return;
    }
    std::vector<uint32_t> cur;
    subpartition_rec(lam.parts(), 0, lam.first(), size, cur, f);
}

} // namespace plethz
