#pragma once

#include <map>

#include <boost/multiprecision/cpp_int.hpp>

#include "plethz/lr.hpp"
#include "plethz/partition.hpp"

namespace plethz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Integer combination of irreducible characters of a fixed S_n.
struct IrrDecomposition {
    uint32_t degree = 0;
    std::map<Partition, i64> coeffs; // zero-free; all keys partition degree

    IrrDecomposition() = default;
    explicit IrrDecomposition(uint32_t deg) : degree(deg) {}
    static IrrDecomposition irreducible(const Partition& lam, i64 c = 1);

    i64 coeff(const Partition& lam) const;
    void set(const Partition& lam, i64 c);
    void accumulate(const Partition& lam, i64 c);
    i64 min_coeff() const; // 0 for the zero character
    bool is_zero() const { return coeffs.empty(); }

    IrrDecomposition& operator+=(const IrrDecomposition& o);
    IrrDecomposition& operator-=(const IrrDecomposition& o);
    friend IrrDecomposition operator+(IrrDecomposition a, const IrrDecomposition& b) { return a += b; }
    friend IrrDecomposition operator-(IrrDecomposition a, const IrrDecomposition& b) { return a -= b; }
    friend bool operator==(const IrrDecomposition& a, const IrrDecomposition& b) {
        return a.degree == b.degree && a.coeffs == b.coeffs;
    }
    std::string str() const;
};

// Rational combination of power sums p_rho of a fixed degree.
struct PowerSumPoly {
    uint32_t degree = 0;
    std::map<Partition, BigRat> coeffs;

    PowerSumPoly() = default;
    explicit PowerSumPoly(uint32_t deg) : degree(deg) {}
    void accumulate(const Partition& rho, const BigRat& c);
};

// Exact cycle-type distribution of a permutation group (class proportions).
struct CycleIndex {
    BigInt group_order = 1;
    std::map<Partition, BigRat> coeffs; // sum to 1
};

// chi^lambda(rho) by Murnaghan-Nakayama border-strip recursion. Memoized.
i64 character_value(const Partition& lam, const Partition& rho);

// Dimension f^lambda by the hook length formula.
BigInt dimension(const Partition& lam);

// Induction product (phi x theta) induced to S_{n1+n2}.
IrrDecomposition boxtimes(const IrrDecomposition& phi, const IrrDecomposition& theta);

// phi / chi^lambda: skew-divide each constituent and expand via LR.
IrrDecomposition divide(const IrrDecomposition& phi, const Partition& lam);

// Permutation character zeta^lambda = sum_gamma K_{gamma,lambda} chi^gamma.
IrrDecomposition permutation_character(const Partition& lam);

constexpr uint32_t kOracleBound = 16;     // |lambda| * |nu| cap for the plethysm oracle
constexpr uint32_t kRhoBound = 14;        // m * n cap for rho
constexpr uint32_t kSylowOracleBound = 16;

// Full Schur expansion of s_lambda o s_nu in the power-sum basis.
IrrDecomposition plethysm_oracle(const Partition& lam, const Partition& nu,
                                 uint32_t bound = kOracleBound);

// s_lambda o p_2 (every p_j replaced by p_{2j}); used to pin the domino sign rule.
IrrDecomposition plethysm_p2_oracle(const Partition& lam, uint32_t bound = kOracleBound);

// rho^{alpha/beta}_m = X(1_{S_m}; chi^{alpha/beta}) induced to S_{m |alpha/beta|}.
IrrDecomposition rho(const Partition& alpha, uint32_t m, uint32_t bound = kRhoBound);
IrrDecomposition rho(const SkewShape& shape, uint32_t m, uint32_t bound = kRhoBound);

// Cycle index of a Sylow 2-subgroup of S_n.
CycleIndex cycle_index_sylow2(uint32_t n);

// Z^lambda = <chi^lambda restricted to P_n, 1> via the cycle index.
u64 sylow_branching_oracle(const Partition& lam, uint32_t bound = kSylowOracleBound);

// Characteristic-map conversions (round-trip is the identity).
PowerSumPoly to_power_sums(const IrrDecomposition& phi);
IrrDecomposition from_power_sums(const PowerSumPoly& f);

BigInt z_rho(const Partition& rho); // centralizer order of cycle type rho

void clear_charalg_caches();

} // namespace plethz
