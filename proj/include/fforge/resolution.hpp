#pragma once

#include "fforge/fitting.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fforge {

/// A decomposition group G_v = <g_1> x ... x <g_{r-1}> x <y> inside
/// G x Gamma, with Gamma truncated to Z/p^level. The last factor of every
/// level group is the Gamma surrogate; y = (g, gamma^t).
struct DecompositionModel {
    std::string name;
    std::vector<int> group_orders;                 // G
    int p = 3;
    std::vector<std::vector<int>> torsion_generators; // residues in G
    std::vector<int> y_torsion;                    // g, residues in G (p-power order)
    std::int64_t t = 1;                            // power of p
    int level_n = 1;
    int level_m = 2;

    std::size_t r() const { return torsion_generators.size() + 1; }
};

FiniteAbelianGroup level_group(const DecompositionModel& model, int level);
/// Index of (g, gamma^t) in the level group.
int y_index(const DecompositionModel& model, const FiniteAbelianGroup& level_g);
/// Index of (h, 0) in the level group for h given by residues in G.
int torsion_index(const FiniteAbelianGroup& level_g, const std::vector<int>& residues);

/// Least n with gamma^(p^n) in the closure of <y>.
int least_valid_level(const DecompositionModel& model);
/// Throws std::invalid_argument when the model is inconsistent.
void validate_model(const DecompositionModel& model);

struct ResolutionData {
    DecompositionModel model;
    ResidueRing ring;
    FiniteAbelianGroup group_n;
    FiniteAbelianGroup group_m;
    std::vector<GroupRingElement> alpha, beta;                 // level n
    std::vector<GroupRingElement> lifted_alpha, lifted_beta;   // level m
    GrMatrix A, Q;                                             // level n
    GrMatrix A_lift;                                           // level m
    GroupRingElement gamma_term;                               // gamma^(p^n) - 1 at level m
    int least_level;
};

/// (alpha_1 e_1 | ... | alpha_r e_r | q_12 | q_13 | ... | q_{r-1,r}).
GrMatrix build_A_matrix(const std::vector<GroupRingElement>& alpha, const std::vector<GroupRingElement>& beta);
GrMatrix build_Q_matrix(const std::vector<GroupRingElement>& beta);

/// Requires 1 <= n <= m; n == m is allowed (the lift then has zero product).
ResolutionData build_A_Q(const DecompositionModel& model, int M);
/// Same data with the lift taken at another level.
ResolutionData build_A_Q_at(const DecompositionModel& model, int M, int level_m);

/// span(columns of A_r) == kernel of y -> sum y_i beta_i at level n.
bool resolution_exact(const ResolutionData& res);

/// sum_{e=0}^{r} D^(r-e) Min_e(A~) over the denominator D = gamma^(p^n) - 1.
FractionalIdeal shifted_fitt1_alternating(const ResolutionData& res);

/// One exponent pattern of the explicit r-minor generators: the product of
/// all alpha~ (full_product), or alpha~_r beta~_r^t_r prod_L alpha~ prod_{L^c} beta~^t.
struct RminorPattern {
    bool full_product = false;
    std::vector<bool> in_L;  // size r - 1
    std::vector<int> t;      // size r, t[r-1] >= 1
};
std::vector<RminorPattern> rminor_patterns(std::size_t r);

IdealCanonical rminor_ideal_explicit(const ResolutionData& res);
/// (1 / D) Min_r(A~) with Min_r computed from the minors.
FractionalIdeal rminor_fractional(const ResolutionData& res);

/// G_v = A x B with A finite: T = A x C and B = C x <a0 * y>.
struct Decomposition {
    std::vector<int> A;   // sorted indices (level m group)
    std::vector<int> C;
    int a0 = 0;
    int r_B = 1;
};
/// Thrown when the torsion part is larger than the enumeration bound.
struct BoundExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
std::vector<Decomposition> enumerate_decompositions(const DecompositionModel& model, std::size_t bound = 16);

/// Generated by N(A) * DeltaB^(r_B - 2) over all decompositions, brought to
/// the common denominator gamma^(p^N) - 1.
FractionalIdeal intrinsic_ideal(const DecompositionModel& model, int M, std::size_t bound = 16);

/// r = 1 shape: compares against (1 / (1 - y^-1)).
FracIdealComparison rank_one_shape_check(const DecompositionModel& model, int M);
/// r = 2 with cyclic torsion: compares against (1, N(T) / (1 - y)).
FracIdealComparison cyclic_torsion_shape_check(const DecompositionModel& model, int M);

/// Fitt_e(A~) for e = 0..r at level m_hi pushed down to level m_lo equals
/// Fitt_e(A~) computed at level m_lo.
bool tower_fitt_compat(const DecompositionModel& model, int M, int m_lo, int m_hi);

/// Default regression models (n = 1, m = 2) for an odd prime p.
std::vector<DecompositionModel> default_catalog(int p = 3);

} // namespace fforge
