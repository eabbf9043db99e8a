#pragma once

#include "fforge/ideal.hpp"

#include <vector>

namespace fforge {

/// Matrix over (Z/p^M)[G].
class GrMatrix {
public:
    GrMatrix(FiniteAbelianGroup g, ResidueRing k, std::size_t rows, std::size_t cols);

    const FiniteAbelianGroup& group() const { return group_; }
    const ResidueRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, GroupRingElement x);

    GrMatrix transposed() const;
    bool operator==(const GrMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    FiniteAbelianGroup group_;
    ResidueRing ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GroupRingElement> e_;
};

/// R^b --(relations)--> R^a --> M --> 0, relations stored as an a x b matrix
/// whose columns are the relations.
struct Presentation {
    GrMatrix relations;

    std::size_t target_rank() const { return relations.rows(); }
    std::size_t relation_count() const { return relations.cols(); }
};

/// All k x k minors, row subsets outer and column subsets inner, both in
/// lexicographic order. minors(m, 0) == {1}.
std::vector<GroupRingElement> minors(const GrMatrix& m, std::size_t k);
/// Determinant of a square matrix (Laplace expansion).
GroupRingElement determinant(const GrMatrix& m);

/// Ideal generated by the (a - e)-minors; the unit ideal once a - e <= 0.
IdealCanonical fitt(const Presentation& pres, std::size_t e);

Presentation transpose_presentation(const Presentation& pres);
Presentation direct_sum(const Presentation& a, const Presentation& b);
/// Entrywise image along a group homomorphism.
Presentation push_forward(const Presentation& pres, const GroupHom& pi);

/// A vector in R^r.
using GrVector = std::vector<GroupRingElement>;

/// Generators of { y in R^r : sum y_i beta_i = 0 } for beta_i = g_i - 1 with
/// the g_i generating an internal direct product: first alpha_i e_i
/// (alpha_i the norm of <g_i>), then q_ij = -beta_j e_i + beta_i e_j for
/// i < j in lexicographic order.
std::vector<GrVector> kernel_generators(const std::vector<GroupRingElement>& betas);

/// Matrix of y -> sum y_i beta_i as a Z/p^M-linear map R^r -> R, with rows
/// indexed by (i, g) and row (i, g) = g * beta_i.
ZmodMatrix flatten_row_map(const std::vector<GroupRingElement>& betas);
/// Z/p^M-span (Howell form) of { g * v : g in G, v in vectors } in R^r.
HowellForm flatten_module_span(const std::vector<GrVector>& vectors, const FiniteAbelianGroup& g,
                               const ResidueRing& k, std::size_t r);

} // namespace fforge
