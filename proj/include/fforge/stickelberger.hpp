#pragma once

#include "fforge/cyclotomic.hpp"
#include "fforge/group_ring.hpp"

#include <set>
#include <vector>

namespace fforge {

/// (Z/m)^x as a product of cyclic groups, with the labeling a -> sigma_a.
struct UnitGroup {
    int m = 1;
    FiniteAbelianGroup group;
    std::vector<int> generators;  // residues mod m of the standard generators
    std::vector<int> labels;      // group index -> a in [1, m)
    std::vector<int> index_of;    // a in [0, m) -> group index, or -1

    /// Group index of sigma_a; a must be prime to m.
    int sigma(std::int64_t a) const;
};

UnitGroup unit_group(int m);
bool is_valid_conductor(int m);

/// Theta_S^T(0) for Q(zeta_m)/Q. S holds the finite primes; the infinite
/// place is always present.
struct StickelbergerElement {
    UnitGroup units;
    std::set<std::int64_t> S;
    std::set<std::int64_t> T;
    RationalGroupRingElement value;

    int conductor() const { return units.m; }
};

/// S = primes dividing m; value = sum (1/2 - a/m) sigma_a^-1.
StickelbergerElement theta_min(int m);
/// Multiplies by (1 - sigma_v^-1) and adds v to S.
StickelbergerElement deplete(const StickelbergerElement& theta, std::int64_t v);
/// Multiplies by prod (1 - v sigma_v^-1) over v in T.
StickelbergerElement smooth_T(const StickelbergerElement& theta, const std::set<std::int64_t>& T);
/// theta_min(m) depleted at S \ {l | m} and smoothed at T.
StickelbergerElement theta_direct(int m, const std::set<std::int64_t>& S, const std::set<std::int64_t>& T);

/// Coefficients p-integral and e+ theta = 0. Requires p odd prime and T nonempty.
bool integrality_check(const StickelbergerElement& theta, std::int64_t p);
/// theta + sigma_{-1} theta == 0.
bool minus_pure(const StickelbergerElement& theta);

/// A character of (Z/m)^x: chi(generator i) = zeta_e^(exponents[i] * e / d_i).
struct CharacterValue {
    std::vector<int> exponents;
    int conductor = 1;
    CyclotomicNumber value;  // L_S(0, chi), S = primes dividing m
};

/// L_S(0, chi) = -B_{1, chi_f} times the missing Euler factors, for every chi.
std::vector<CharacterValue> bernoulli_oracle(int m);
/// sum_chi L_S(0, chi) e_chi rebuilt as a rational group ring element.
RationalGroupRingElement theta_from_characters(int m);

/// Pushes theta along (Z/m2)^x -> (Z/m1)^x keeping S and T.
StickelbergerElement restrict_theta(const StickelbergerElement& theta, int m1);
/// restrict_theta(theta, m1) == theta_direct(m1, theta.S, theta.T).
bool restriction_compatible(const StickelbergerElement& theta, int m1);

} // namespace fforge
