#pragma once

#include "fforge/group_ring.hpp"

#include <map>
#include <string>
#include <vector>

namespace fforge {

/// Exponent vector over x_1..x_k, y_1..y_k (length 2k).
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order with x_1 < ... < x_k < y_1 < ... < y_k: total
/// degree first, then the exponent of the largest variable (y_k) decides.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial in Z[x_1..x_k, y_1..y_k]; zero coefficients are never stored.
class SparsePoly {
public:
    explicit SparsePoly(std::size_t k = 0) : k_(k) {}

    static SparsePoly constant(std::size_t k, const BigInt& c);
    static SparsePoly x(std::size_t k, std::size_t i); // 1-based
    static SparsePoly y(std::size_t k, std::size_t i); // 1-based

    std::size_t vars() const { return k_; }
    const std::map<Monomial, BigInt, GrlexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    SparsePoly operator-() const;
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);

    bool operator==(const SparsePoly& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    /// Terms in descending grlex order, e.g. "-x2 + 3*x1*y1^2".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const BigInt& c);
    void check(const SparsePoly& o) const;

    std::size_t k_;
    std::map<Monomial, BigInt, GrlexLess> terms_;
};

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// k x k(k-1)/2 matrix with columns q_ij = -x_j e_i + x_i e_j, (i, j) lexicographic.
PolyMatrix generic_Q(std::size_t k);
/// (y_1 e_1 | ... | y_k e_k | Q_k).
PolyMatrix generic_A(std::size_t k);

std::vector<SparsePoly> poly_minors(const PolyMatrix& m, std::size_t cols, std::size_t k);
SparsePoly poly_determinant(const PolyMatrix& m);

/// Every k x k minor of Q_k is the zero polynomial.
bool verify_minQ_zero(std::size_t k);
/// (x_1 ... x_k) * Q_k is the zero row.
bool row_annihilation_check(std::size_t k);

struct MinorClassification {
    std::vector<std::size_t> columns;
    std::size_t product_terms = 0;   // the monomial y_1 ... y_k
    std::size_t divisible_terms = 0; // divisible by some x_i y_i
    std::size_t escapes = 0;
};

struct MonomialReport {
    std::size_t k = 0;
    std::vector<MinorClassification> minors;
    std::size_t product_terms = 0;
    std::size_t divisible_terms = 0;
    std::size_t escapes = 0;
    std::size_t zero_minors = 0;

    std::string to_text() const;
};

MonomialReport classify_minor_monomials(std::size_t k);

/// Substitutes x_i -> xs[i-1], y_i -> ys[i-1] (ring homomorphism Z[x, y] -> R).
GroupRingElement specialize(const SparsePoly& f, const std::vector<GroupRingElement>& xs,
                            const std::vector<GroupRingElement>& ys);

} // namespace fforge
