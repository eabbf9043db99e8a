#pragma once

#include "fforge/group.hpp"
#include "fforge/zmod.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace fforge {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational coefficients.
struct RationalField {
    using value_type = Rational;
    Rational zero() const { return 0; }
    Rational one() const { return 1; }
    Rational from_int(std::int64_t x) const { return x; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational neg(const Rational& a) const { return -a; }
    bool operator==(const RationalField&) const { return true; }
};

/// Adapter giving ResidueRing the coefficient interface used below.
struct ResidueCoeffs {
    ResidueRing ring;
    using value_type = Residue;
    Residue zero() const { return 0; }
    Residue one() const { return ring.reduce(1); }
    Residue from_int(std::int64_t x) const { return ring.reduce(x); }
    Residue add(Residue a, Residue b) const { return ring.add(a, b); }
    Residue sub(Residue a, Residue b) const { return ring.sub(a, b); }
    Residue mul(Residue a, Residue b) const { return ring.mul(a, b); }
    Residue neg(Residue a) const { return ring.neg(a); }
    bool operator==(const ResidueCoeffs& o) const { return ring == o.ring; }
};

/// Element of the group ring K[G], stored densely in group-index order.
template <class Coeffs>
class BasicGroupRingElement {
public:
    using value_type = typename Coeffs::value_type;

    BasicGroupRingElement(FiniteAbelianGroup g, Coeffs k)
        : group_(std::move(g)), k_(std::move(k)), c_(group_.order(), k_.zero()) {}

    BasicGroupRingElement(FiniteAbelianGroup g, Coeffs k, std::vector<value_type> coeffs)
        : group_(std::move(g)), k_(std::move(k)), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(group_.order()))
            throw std::invalid_argument("group ring element: coefficient count must equal |G|");
        if constexpr (std::is_same_v<Coeffs, ResidueCoeffs>)
            for (auto& x : c_)
                x = k_.ring.reduce(x);
    }

    static BasicGroupRingElement zero(FiniteAbelianGroup g, Coeffs k) { return {std::move(g), std::move(k)}; }
    static BasicGroupRingElement basis(FiniteAbelianGroup g, Coeffs k, int index) {
        BasicGroupRingElement x(std::move(g), std::move(k));
        x.c_.at(index) = x.k_.one();
        return x;
    }
    static BasicGroupRingElement one(FiniteAbelianGroup g, Coeffs k) { return basis(std::move(g), std::move(k), 0); }

    const FiniteAbelianGroup& group() const { return group_; }
    const Coeffs& coeffs() const { return k_; }
    const std::vector<value_type>& coefficients() const { return c_; }
    const value_type& operator[](int index) const { return c_[index]; }
    void set(int index, value_type v) {
        if constexpr (std::is_same_v<Coeffs, ResidueCoeffs>)
            v = k_.ring.reduce(v);
        c_.at(index) = std::move(v);
    }
    std::size_t size() const { return c_.size(); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!(x == k_.zero()))
                return false;
        return true;
    }

    value_type augmentation() const {
        value_type s = k_.zero();
        for (const auto& x : c_)
            s = k_.add(s, x);
        return s;
    }

    BasicGroupRingElement& operator+=(const BasicGroupRingElement& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = k_.add(c_[i], o.c_[i]);
        return *this;
    }
    BasicGroupRingElement& operator-=(const BasicGroupRingElement& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] = k_.sub(c_[i], o.c_[i]);
        return *this;
    }
    friend BasicGroupRingElement operator+(BasicGroupRingElement a, const BasicGroupRingElement& b) { return a += b; }
    friend BasicGroupRingElement operator-(BasicGroupRingElement a, const BasicGroupRingElement& b) { return a -= b; }
    BasicGroupRingElement operator-() const {
        BasicGroupRingElement r = *this;
        for (auto& x : r.c_)
            x = k_.neg(x);
        return r;
    }

    /// Convolution over the group law.
    friend BasicGroupRingElement operator*(const BasicGroupRingElement& a, const BasicGroupRingElement& b) {
        a.check(b);
        BasicGroupRingElement r(a.group_, a.k_);
        const int n = a.group_.order();
        for (int i = 0; i < n; ++i) {
            if (a.c_[i] == a.k_.zero())
                continue;
            for (int j = 0; j < n; ++j) {
                if (b.c_[j] == a.k_.zero())
                    continue;
                int t = a.group_.op(i, j);
                r.c_[t] = a.k_.add(r.c_[t], a.k_.mul(a.c_[i], b.c_[j]));
            }
        }
        return r;
    }
    BasicGroupRingElement& operator*=(const BasicGroupRingElement& o) { return *this = *this * o; }

    BasicGroupRingElement scaled(const value_type& s) const {
        BasicGroupRingElement r = *this;
        for (auto& x : r.c_)
            x = k_.mul(x, s);
        return r;
    }

    /// Multiplication by the group element with the given index (a permutation).
    BasicGroupRingElement shifted(int g) const {
        BasicGroupRingElement r(group_, k_);
        for (int i = 0; i < group_.order(); ++i)
            r.c_[group_.op(g, i)] = c_[i];
        return r;
    }

    BasicGroupRingElement pow(unsigned k) const {
        BasicGroupRingElement r = one(group_, k_);
        for (unsigned i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    bool operator==(const BasicGroupRingElement& o) const {
        return group_ == o.group_ && k_ == o.k_ && c_ == o.c_;
    }

private:
    void check(const BasicGroupRingElement& o) const {
        if (!(group_ == o.group_))
            throw std::invalid_argument("group ring element: group mismatch");
        if (!(k_ == o.k_))
            throw std::invalid_argument("group ring element: coefficient ring mismatch");
    }

    FiniteAbelianGroup group_;
    Coeffs k_;
    std::vector<value_type> c_;
};

using GroupRingElement = BasicGroupRingElement<ResidueCoeffs>;
using RationalGroupRingElement = BasicGroupRingElement<RationalField>;

inline GroupRingElement gr_zero(const FiniteAbelianGroup& g, const ResidueRing& k) {
    return GroupRingElement::zero(g, ResidueCoeffs{k});
}
inline GroupRingElement gr_one(const FiniteAbelianGroup& g, const ResidueRing& k) {
    return GroupRingElement::one(g, ResidueCoeffs{k});
}
inline GroupRingElement gr_basis(const FiniteAbelianGroup& g, const ResidueRing& k, int index) {
    return GroupRingElement::basis(g, ResidueCoeffs{k}, index);
}
inline GroupRingElement gr_from(const FiniteAbelianGroup& g, const ResidueRing& k, std::vector<Residue> coeffs) {
    return GroupRingElement(g, ResidueCoeffs{k}, std::move(coeffs));
}
inline const ResidueRing& residue_ring(const GroupRingElement& x) { return x.coeffs().ring; }

/// Sum of the elements of the subgroup generated by the given generators.
GroupRingElement norm_element(const FiniteAbelianGroup& g, const ResidueRing& k,
                              const std::vector<GroupElement>& subgroup_generators);
/// Sum of the elements of a subgroup given as an index list.
GroupRingElement norm_of_subgroup(const FiniteAbelianGroup& g, const ResidueRing& k, std::span<const int> subgroup);
/// {b - 1 : b a supplied generator}.
std::vector<GroupRingElement> aug_ideal_gens(const ResidueRing& k, const std::vector<GroupElement>& subgroup_generators);

/// |G| x |G| matrix whose row g is the coefficient vector of g * x.
ZmodMatrix multiplication_matrix(const GroupRingElement& x);

std::optional<GroupRingElement> unit_inverse(const GroupRingElement& x);
bool is_unit(const GroupRingElement& x);
bool is_zero_divisor(const GroupRingElement& x);

/// Linear extension of a group homomorphism to the group rings.
template <class Coeffs>
BasicGroupRingElement<Coeffs> restrict_element(const GroupHom& pi, const BasicGroupRingElement<Coeffs>& x) {
    if (!(pi.source() == x.group()))
        throw std::invalid_argument("restrict_element: element does not live on the source group");
    std::vector<typename Coeffs::value_type> c(pi.target().order(), x.coeffs().zero());
    for (int i = 0; i < x.group().order(); ++i)
        c[pi(i)] = x.coeffs().add(c[pi(i)], x[i]);
    return BasicGroupRingElement<Coeffs>(pi.target(), x.coeffs(), std::move(c));
}

/// Lifts a unit of (Z/p^M)[G1] along a surjection G2 -> G1 with p-group kernel.
GroupRingElement lift_unit(const GroupHom& pi, const GroupRingElement& u);

std::string to_string(const GroupRingElement& x);

} // namespace fforge
