#pragma once

#include <optional>
#include <tuple>

#include "plethz/charalg.hpp"
#include "plethz/partition.hpp"

namespace plethz {

// a^mu_{theta,(m)} by the recursive formula (signed double sum, recursing on m
// with skew coefficients expanded through LR). Result asserted non-negative.
i64 pleth_recursive(const Partition& mu, const Partition& theta, uint32_t m);

// a^{nu/(1^k)}_{lambda',(m)} evaluated through the k=i term identity
//   sum_{alpha |- mk, beta |- k} a^alpha_{beta',(m)} a^{nuhat/alpha}_{lambda/beta,(m-1)}.
i64 pleth_14_6ii(const Partition& nu, const Partition& lam, uint32_t m, uint32_t k);

// Same coefficient expanded through LR on the left side (test cross-check).
i64 pleth_14_6ii_lhs(const Partition& nu, const Partition& lam, uint32_t m, uint32_t k);

// m=2 specialization with the k=0,1,2 fast branches.
i64 pleth_m2(const Partition& mu, const Partition& theta);

// Full deflation of mu with respect to S_n: coefficients a^mu_{lambda,(m)},
// m = |mu|/n. Closed forms where available, recursion otherwise.
IrrDecomposition deflate(const Partition& mu, uint32_t n);

// Conjugation symmetry a^nu_{lambda,mu} = a^{nu'}_{lambda*,mu'}.
std::tuple<Partition, Partition, Partition>
conj_symmetry(const Partition& nu, const Partition& lam, const Partition& mu);

// Rectangle complement transport: either an equivalent query or certified zero.
struct BorQuery {
    bool zero = false;
    Partition nu, lam, mu; // meaningful when !zero
};
BorQuery bor_complement(const Partition& nu, const Partition& lam, const Partition& mu,
                        uint32_t w, uint32_t h);

enum class ThrallDirection { RowOuter, RowInner }; // a^l_{(n),(2)} vs a^l_{(2),(n)}
int thrall(const Partition& lam, ThrallDirection which);

struct DeBoeckReport {
    uint32_t m = 0, n = 0;
    u64 checked = 0; // shapes examined
    u64 positive = 0;
};
// Parity rule for lambda_1 = m+2 constituents; throws theorem_violated on failure.
DeBoeckReport check_de_boeck_651(uint32_t m, uint32_t n);
// Lex-smallest constituent with a forbidden-parity part; asserted (m+3, m^{n-2}, m-3).
Partition check_de_boeck_652(uint32_t m, uint32_t n);

struct StabilityReport {
    std::vector<i64> values;       // a^{mu^j}_{lambda^j,(2)} for j = 0..j_max
    bool stabilized = false;
    i64 stable_value = 0;
    uint32_t stabilization_index = 0; // first j after which the sequence is constant
};
StabilityReport check_stability_prop17(const Partition& lam, const Partition& mu,
                                       uint32_t j_max);

struct Conj18Report {
    i64 min_coeff_i = 0;
    i64 min_coeff_ii = 0;
    bool holds() const { return min_coeff_i >= 0 && min_coeff_ii >= 0; }
};
Conj18Report check_conjecture18(uint32_t a, uint32_t b, uint32_t bound = kOracleBound);

void clear_plethysm_caches();

} // namespace plethz
