#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "plethz/partition.hpp"

namespace plethz {

using TypeHist = std::map<Partition, u64>;

// c^lambda_{mu,nu}: LR fillings of lambda/mu of type nu. Returns 0 unless
// |lambda| = |mu| + |nu| and both fit. Memoized; symmetric in (mu, nu).
u64 lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Iterated coefficient c^lambda_{mu^1,...,mu^r}.
u64 lr_multi(const Partition& lam, const std::vector<Partition>& factors);

// Kostka number: SSYT of shape gamma and content lam.
u64 kostka(const Partition& gamma, const Partition& lam);

// <chi^{gamma/alpha}, chi^{delta/beta}> by type-bucketed counting.
u64 skew_inner(const SkewShape& a, const SkewShape& b);

// {lambda : exists mu in A, nu in B with c^lambda_{mu,nu} > 0}.
std::set<Partition> star_product(const std::set<Partition>& A, const std::set<Partition>& B);

bool has_lr_filling_of_type(const SkewShape& shape, const Partition& nu);

// All LR fillings of a skew shape bucketed by type. Memoized.
TypeHist lr_type_histogram(const SkewShape& shape);
TypeHist lr_type_histogram(const Partition& outer, const Partition& inner);

// Expansion of s_mu * s_nu: emit(lambda) once per LR tableau, i.e.
// c^lambda_{mu,nu} times per lambda. No shared state.
void lr_expand(const Partition& mu, const Partition& nu,
               const std::function<void(const Partition&)>& emit);
std::map<Partition, u64> lr_expand_map(const Partition& mu, const Partition& nu);

// Horizontal-strip predicates and enumeration of strip removals.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);
void for_each_hstrip_removal(const Partition& p, uint32_t size,
                             const std::function<void(const Partition&)>& f);

void clear_lr_caches();

} // namespace plethz
