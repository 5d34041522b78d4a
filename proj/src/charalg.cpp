#include "plethz/charalg.hpp"

#include <algorithm>

#include "plethz/memo.hpp"

namespace plethz {

IrrDecomposition IrrDecomposition::irreducible(const Partition& lam, i64 c) {
    IrrDecomposition d(lam.size());
    if (c) d.coeffs[lam] = c;
    return d;
}

i64 IrrDecomposition::coeff(const Partition& lam) const {
    auto it = coeffs.find(lam);
    return it == coeffs.end() ? 0 : it->second;
}

void IrrDecomposition::set(const Partition& lam, i64 c) {
    if (c == 0) coeffs.erase(lam);
    else coeffs[lam] = c;
}

void IrrDecomposition::accumulate(const Partition& lam, i64 c) {
    if (c == 0) return;
    auto it = coeffs.find(lam);
    if (it == coeffs.end()) { coeffs[lam] = c; return; }
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs.erase(it);
}

i64 IrrDecomposition::min_coeff() const {
    i64 m = 0;
    for (const auto& [lam, c] : coeffs) m = std::min(m, c);
    return m;
}

IrrDecomposition& IrrDecomposition::operator+=(const IrrDecomposition& o) {
    if (degree != o.degree && !o.coeffs.empty() && !coeffs.empty())
        throw size_mismatch("adding characters of different degrees");
    if (coeffs.empty()) degree = o.degree;
    for (const auto& [lam, c] : o.coeffs) accumulate(lam, c);
    return *this;
}

IrrDecomposition& IrrDecomposition::operator-=(const IrrDecomposition& o) {
    if (degree != o.degree && !o.coeffs.empty() && !coeffs.empty())
        throw size_mismatch("subtracting characters of different degrees");
    if (coeffs.empty()) degree = o.degree;
    for (const auto& [lam, c] : o.coeffs) accumulate(lam, -c);
    return *this;
}

std::string IrrDecomposition::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : coeffs) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "*" + lam.str();
    }
    return s;
}

void PowerSumPoly::accumulate(const Partition& rho, const BigRat& c) {
    if (c == 0) return;
    auto it = coeffs.find(rho);
    if (it == coeffs.end()) { coeffs[rho] = c; return; }
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
}

namespace {

struct PairKey {
    Partition a, b;
    bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
};
struct PairKeyHash {
    size_t operator()(const PairKey& k) const {
        return hash_combine(PartitionHash{}(k.a), PartitionHash{}(k.b));
    }
};

ConcurrentMemo<PairKey, i64, PairKeyHash> g_mn_memo;

std::vector<i64> beta_set(const Partition& lam) {
    size_t T = lam.length();
    std::vector<i64> b(T);
    for (size_t i = 0; i < T; ++i) b[i] = (i64)lam[i] + (i64)(T - 1 - i); // descending
    return b;
}

Partition from_beta(std::vector<i64> b) {
    std::sort(b.begin(), b.end(), std::greater<i64>());
    size_t T = b.size();
    std::vector<uint32_t> parts;
    for (size_t i = 0; i < T; ++i) {
        i64 v = b[i] - (i64)(T - 1 - i);
        if (v < 0) throw error("invalid beta set");
        if (v > 0) parts.push_back((uint32_t)v);
    }
    return Partition::from_sorted(std::move(parts));
}

// rho sorted descending; remove parts front to back
i64 mn_value(const Partition& lam, const Partition& rho, size_t part_idx) {
    if (part_idx == rho.length()) return lam.empty() ? 1 : 0;
    std::vector<uint32_t> rest(rho.parts().begin() + part_idx, rho.parts().end());
    Partition rho_rest = Partition::from_sorted(std::move(rest));
    PairKey key{lam, rho_rest};
    if (auto v = g_mn_memo.get(key)) return *v;

    uint32_t r = rho[part_idx];
    std::vector<i64> b = beta_set(lam);
    i64 total = 0;
    for (size_t i = 0; i < b.size(); ++i) {
        i64 nb = b[i] - (i64)r;
        if (nb < 0) continue;
        bool clash = false;
        int between = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (j == i) continue;
            if (b[j] == nb) { clash = true; break; }
            if (b[j] > nb && b[j] < b[i]) ++between;
        }
        if (clash) continue;
        std::vector<i64> b2 = b;
        b2[i] = nb;
        i64 sub = mn_value(from_beta(std::move(b2)), rho, part_idx + 1);
        total = checked_add(total, (between % 2) ? -sub : sub);
    }
    g_mn_memo.put(key, total);
    return total;
}

} // namespace

i64 character_value(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size()) throw size_mismatch("character_value: |lambda| != |rho|");
    return mn_value(lam, rho, 0);
}

BigInt dimension(const Partition& lam) {
    uint32_t n = lam.size();
    BigInt num = 1;
    for (uint32_t i = 2; i <= n; ++i) num *= i;
    Partition conj = lam.conjugate();
    BigInt den = 1;
    for (size_t i = 0; i < lam.length(); ++i)
        for (uint32_t j = 0; j < lam[i]; ++j)
            den *= (i64)(lam[i] - j) + (i64)(conj[j] - i) - 1;
    return num / den;
}

IrrDecomposition boxtimes(const IrrDecomposition& phi, const IrrDecomposition& theta) {
    IrrDecomposition out(phi.degree + theta.degree);
    for (const auto& [mu, cm] : phi.coeffs)
        for (const auto& [nu, cn] : theta.coeffs) {
            i64 w = checked_mul(cm, cn);
            lr_expand(mu, nu, [&](const Partition& lam) { out.accumulate(lam, w); });
        }
    return out;
}

IrrDecomposition divide(const IrrDecomposition& phi, const Partition& lam) {
    if (lam.size() > phi.degree) return IrrDecomposition(0); // chi^{mu/lam} = 0 throughout
    IrrDecomposition out(phi.degree - lam.size());
    for (const auto& [mu, c] : phi.coeffs) {
        if (!mu.contains(lam)) continue;
        for (const auto& [nu, mult] : lr_type_histogram(mu, lam))
            out.accumulate(nu, checked_mul(c, (i64)mult));
    }
    return out;
}

IrrDecomposition permutation_character(const Partition& lam) {
    IrrDecomposition cur = IrrDecomposition::irreducible(Partition());
    for (uint32_t part : lam.parts())
        cur = boxtimes(cur, IrrDecomposition::irreducible(Partition{part}));
    cur.degree = lam.size();
    return cur;
}

BigInt z_rho(const Partition& rho) {
    BigInt z = 1;
    uint32_t run_val = 0, run_len = 0;
    auto flush = [&] {
        for (uint32_t j = 1; j <= run_len; ++j) z *= (i64)run_val * j;
    };
    for (uint32_t v : rho.parts()) {
        if (v == run_val) { ++run_len; continue; }
        flush();
        run_val = v;
        run_len = 1;
    }
    flush();
    return z;
}

PowerSumPoly to_power_sums(const IrrDecomposition& phi) {
    PowerSumPoly out(phi.degree);
    for (const auto& rho : partitions_of(phi.degree)) {
        BigRat c = 0;
        for (const auto& [lam, d] : phi.coeffs)
            c += BigRat(d) * character_value(lam, rho);
        if (c != 0) out.coeffs[rho] = c / BigRat(z_rho(rho));
    }
    return out;
}

IrrDecomposition from_power_sums(const PowerSumPoly& f) {
    IrrDecomposition out(f.degree);
    for (const auto& mu : partitions_of(f.degree)) {
        BigRat a = 0;
        for (const auto& [rho, c] : f.coeffs)
            a += c * character_value(mu, rho);
        if (a == 0) continue;
        if (denominator(a) != 1)
            throw non_integer_result("non-integer Schur coefficient at " + mu.str());
        BigInt num = numerator(a);
        if (num > std::numeric_limits<i64>::max() || num < std::numeric_limits<i64>::min())
            throw overflow("Schur coefficient exceeds 64 bits");
        out.set(mu, (i64)num.convert_to<long long>());
    }
    return out;
}

namespace {

PowerSumPoly schur_to_power_sums(const Partition& lam) {
    PowerSumPoly out(lam.size());
    for (const auto& rho : partitions_of(lam.size())) {
        i64 ch = character_value(lam, rho);
        if (ch) out.coeffs[rho] = BigRat(ch) / BigRat(z_rho(rho));
    }
    return out;
}

PowerSumPoly multiply(const PowerSumPoly& a, const PowerSumPoly& b) {
    PowerSumPoly out(a.degree + b.degree);
    for (const auto& [r1, c1] : a.coeffs)
        for (const auto& [r2, c2] : b.coeffs)
            out.accumulate(disjoint_union(r1, r2), c1 * c2);
    return out;
}

// p_k o g: every p_j in g becomes p_{jk}
PowerSumPoly plethysm_by_pk(const PowerSumPoly& g, uint32_t k) {
    PowerSumPoly out(g.degree * k);
    for (const auto& [rho, c] : g.coeffs) {
        std::vector<uint32_t> parts;
        parts.reserve(rho.length());
        for (uint32_t v : rho.parts()) parts.push_back(v * k);
        out.coeffs[Partition::from_sorted(std::move(parts))] = c;
    }
    return out;
}

IrrDecomposition plethysm_from_inner(const Partition& lam, const PowerSumPoly& g) {
    // s_lam o g = sum_rho chi^lam(rho)/z_rho * prod_j (p_{rho_j} o g)
    uint32_t n = lam.size();
    PowerSumPoly total(n * g.degree);
    for (const auto& rho : partitions_of(n)) {
        i64 ch = character_value(lam, rho);
        if (!ch) continue;
        PowerSumPoly term(0);
        term.coeffs[Partition()] = 1;
        for (uint32_t part : rho.parts())
            term = multiply(term, plethysm_by_pk(g, part));
        BigRat w = BigRat(ch) / BigRat(z_rho(rho));
        for (const auto& [pi, c] : term.coeffs) total.accumulate(pi, w * c);
    }
    return from_power_sums(total);
}

} // namespace

IrrDecomposition plethysm_oracle(const Partition& lam, const Partition& nu, uint32_t bound) {
    u64 total = (u64)lam.size() * nu.size();
    if (total > bound)
        throw scale_exceeded("plethysm oracle: degree " + std::to_string(total) +
                             " exceeds bound " + std::to_string(bound));
    if (lam.empty()) {
        // s_empty o anything = 1
        return IrrDecomposition::irreducible(Partition());
    }
    if (nu.empty()) {
        // s_lam o s_empty = s_lam(1) = 1 iff lam has at most one row
        IrrDecomposition out(0);
        if (lam.length() <= 1) out.coeffs[Partition()] = 1;
        return out;
    }
    return plethysm_from_inner(lam, schur_to_power_sums(nu));
}

IrrDecomposition plethysm_p2_oracle(const Partition& lam, uint32_t bound) {
    if ((u64)lam.size() * 2 > bound)
        throw scale_exceeded("p2 plethysm oracle: degree exceeds bound");
    PowerSumPoly p2(2);
    p2.coeffs[Partition{2}] = 1;
    return plethysm_from_inner(lam, p2);
}

IrrDecomposition rho(const Partition& alpha, uint32_t m, uint32_t bound) {
    if ((u64)m * alpha.size() > bound)
        throw scale_exceeded("rho: m*n exceeds bound " + std::to_string(bound));
    std::vector<uint32_t> row{m};
    return plethysm_oracle(alpha, Partition::from_sorted(std::move(row)),
                           std::max(bound, kOracleBound));
}

IrrDecomposition rho(const SkewShape& shape, uint32_t m, uint32_t bound) {
    if ((u64)m * shape.size() > bound)
        throw scale_exceeded("rho: m*n exceeds bound " + std::to_string(bound));
    IrrDecomposition out(m * shape.size());
    for (const auto& [eta, c] : lr_type_histogram(shape)) {
        IrrDecomposition term = rho(eta, m, bound);
        for (const auto& [mu, d] : term.coeffs)
            out.accumulate(mu, checked_mul((i64)c, d));
    }
    return out;
}

namespace {

std::map<Partition, BigRat> ci_multiply(const std::map<Partition, BigRat>& a,
                                        const std::map<Partition, BigRat>& b) {
    std::map<Partition, BigRat> out;
    for (const auto& [r1, c1] : a)
        for (const auto& [r2, c2] : b) {
            auto key = disjoint_union(r1, r2);
            out[key] += c1 * c2;
        }
    return out;
}

std::map<Partition, BigRat> ci_wreath_c2(const std::map<Partition, BigRat>& z) {
    // Z(G wr C2) = (Z(G)^2 + Z(G)[p_j -> p_{2j}]) / 2
    std::map<Partition, BigRat> sq = ci_multiply(z, z);
    for (const auto& [rho, c] : z) {
        std::vector<uint32_t> parts;
        for (uint32_t v : rho.parts()) parts.push_back(2 * v);
        sq[Partition::from_sorted(std::move(parts))] += c;
    }
    for (auto& [rho, c] : sq) c /= 2;
    return sq;
}

} // namespace

CycleIndex cycle_index_sylow2(uint32_t n) {
    if (n == 0) throw precondition_violated("cycle_index_sylow2: n >= 1");
    // power-of-two blocks from the binary expansion
    std::map<Partition, BigRat> acc{{Partition(), BigRat(1)}};
    std::map<Partition, BigRat> pw{{Partition{1}, BigRat(1)}}; // P_1
    uint32_t block = 1;
    uint32_t rest = n;
    while (rest) {
        if (rest & 1) acc = ci_multiply(acc, pw);
        rest >>= 1;
        if (rest) pw = ci_wreath_c2(pw);
        block <<= 1;
    }
    CycleIndex ci;
    ci.coeffs = std::move(acc);
    BigInt order = 1;
    order <<= (n - binary_digit_count(n)); // v_2(n!)
    ci.group_order = order;
    BigRat total = 0;
    for (const auto& [rho, c] : ci.coeffs) total += c;
    if (total != 1) throw non_integer_result("cycle index proportions do not sum to 1");
    return ci;
}

u64 sylow_branching_oracle(const Partition& lam, uint32_t bound) {
    if (lam.size() > bound)
        throw scale_exceeded("sylow oracle: |lambda| = " + std::to_string(lam.size()) +
                             " exceeds bound " + std::to_string(bound));
    if (lam.empty()) return 1;
    CycleIndex ci = cycle_index_sylow2(lam.size());
    BigRat z = 0;
    for (const auto& [rho, q] : ci.coeffs)
        z += q * character_value(lam, rho);
    if (denominator(z) != 1)
        throw non_integer_result("sylow oracle: non-integer multiplicity at " + lam.str());
    BigInt num = numerator(z);
    if (num < 0) throw negative_result("sylow oracle: negative multiplicity at " + lam.str());
    return num.convert_to<unsigned long long>();
}

void clear_charalg_caches() {
    g_mn_memo.clear();
}

} // namespace plethz
