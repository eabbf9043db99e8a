#pragma once

#include <cstdint>
#include <utility>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fforge {

using Residue = std::int64_t;

class HowellForm;

/// Coefficient ring Z/p^M. The modulus is kept below 2^31 so that products of
/// two residues fit in a signed 64-bit integer.
class ResidueRing {
public:
    ResidueRing(std::int64_t p, int M);

    std::int64_t prime() const { return p_; }
    int exponent() const { return M_; }
    std::int64_t modulus() const { return modulus_; }

    Residue reduce(std::int64_t x) const {
        x %= modulus_;
        return x < 0 ? x + modulus_ : x;
    }
    Residue add(Residue a, Residue b) const {
        Residue s = a + b;
        return s >= modulus_ ? s - modulus_ : s;
    }
    Residue sub(Residue a, Residue b) const {
        Residue s = a - b;
        return s < 0 ? s + modulus_ : s;
    }
    Residue neg(Residue a) const { return a == 0 ? 0 : modulus_ - a; }
    Residue mul(Residue a, Residue b) const { return (a * b) % modulus_; }

    /// p-adic valuation of a residue; valuation(0) == M.
    int valuation(Residue a) const;
    /// p^e as a residue (0 when e >= M).
    Residue prime_power(int e) const;
    bool is_unit(Residue a) const { return a % p_ != 0; }
    /// Inverse of a unit; throws std::domain_error otherwise.
    Residue inverse(Residue a) const;

    bool operator==(const ResidueRing& o) const { return p_ == o.p_ && M_ == o.M_; }

    std::string to_string() const;

private:
    std::int64_t p_;
    int M_;
    std::int64_t modulus_;
};

bool is_prime(std::int64_t n);

/// Dense row-major matrix with entries in Z/p^M.
class ZmodMatrix {
public:
    ZmodMatrix(ResidueRing ring, std::size_t rows, std::size_t cols);
    ZmodMatrix(ResidueRing ring, std::size_t cols, const std::vector<std::vector<std::int64_t>>& rows);

    static ZmodMatrix identity(ResidueRing ring, std::size_t n);

    const ResidueRing& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::int64_t v) { data_[i * cols_ + j] = ring_.reduce(v); }

    std::span<const Residue> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    void append_row(std::span<const Residue> r);

    ZmodMatrix operator*(const ZmodMatrix& o) const;
    bool operator==(const ZmodMatrix& o) const {
        return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::vector<std::vector<Residue>> to_rows() const;

private:
    ResidueRing ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Row echelon form with the Howell property, built one vector at a time.
///
/// Every stored row has a pivot p^e (unit part divided out) and, for each
/// pivot row, the multiple p^(M-e) * row lies in the span of the rows with
/// later pivots. That property makes reduction a complete membership test.
class HowellBuilder {
public:
    HowellBuilder(ResidueRing ring, std::size_t cols);

    /// Adds v to the span. Returns true iff the span grew.
    bool add(std::span<const Residue> v);
    /// True iff v lies in the current span.
    bool contains(std::span<const Residue> v) const;
    /// Reduces v in place against the pivots; returns true iff v became zero.
    bool reduce(std::vector<Residue>& v) const;

    std::size_t cols() const { return cols_; }
    std::size_t pivot_count() const { return rows_.size(); }

    /// Canonical Howell form of the current span.
    HowellForm finish() const;

private:
    void normalize(std::vector<Residue>& w, std::size_t c) const;

    ResidueRing ring_;
    std::size_t cols_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<int> pivot_exp_;      // valuation of each stored pivot
    std::vector<long> row_at_col_;    // -1 when the column has no pivot
};

/// Canonical representative of a Z/p^M-submodule of (Z/p^M)^n: rows sorted
/// by pivot column, each pivot a power of p, entries above a pivot p^e lying
/// in [0, p^e), zero rows removed.
class HowellForm {
public:
    const ZmodMatrix& matrix() const { return m_; }
    std::size_t rank() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }
    const ResidueRing& ring() const { return m_.ring(); }
    std::size_t pivot_column(std::size_t i) const;

    bool contains(std::span<const Residue> v) const;
    /// log_p of the number of elements in the span.
    std::int64_t log_size() const;

    bool operator==(const HowellForm& o) const { return m_ == o.m_; }

private:
    friend class HowellBuilder;
    explicit HowellForm(ZmodMatrix m) : m_(std::move(m)) {}
    ZmodMatrix m_;
};

HowellForm howell(const ZmodMatrix& m);
bool span_eq(const ZmodMatrix& a, const ZmodMatrix& b);
bool span_contains(const ZmodMatrix& a, std::span<const Residue> v);
/// Left kernel { x : x * m = 0 }, in Howell form (as a plain matrix).
ZmodMatrix kernel_basis(const ZmodMatrix& m);

} // namespace fforge
