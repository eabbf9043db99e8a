#pragma once

#include "fforge/group_ring.hpp"

#include <vector>

namespace fforge {

/// Ideal of (Z/p^M)[G], stored as the Howell form of its underlying
/// Z/p^M-submodule (a group ring element flattens to its coefficient vector).
class IdealCanonical {
public:
    /// Takes an arbitrary span and checks that it is closed under the group.
    IdealCanonical(FiniteAbelianGroup g, ResidueRing k, HowellForm span);

    static IdealCanonical zero(const FiniteAbelianGroup& g, const ResidueRing& k);
    static IdealCanonical unit(const FiniteAbelianGroup& g, const ResidueRing& k);

    const FiniteAbelianGroup& group() const { return group_; }
    const ResidueRing& ring() const { return ring_; }
    const HowellForm& howell() const { return span_; }

    /// The Howell rows as group ring elements (a Z/p^M-spanning set).
    std::vector<GroupRingElement> rows() const;
    bool contains(const GroupRingElement& x) const;
    bool is_zero() const { return span_.rank() == 0; }
    bool is_unit_ideal() const;

    bool operator==(const IdealCanonical& o) const {
        return group_ == o.group_ && ring_ == o.ring_ && span_ == o.span_;
    }

private:
    struct Trusted {};
    IdealCanonical(FiniteAbelianGroup g, ResidueRing k, HowellForm span, Trusted);
    friend IdealCanonical close_under_group(const FiniteAbelianGroup&, const ResidueRing&,
                                            const std::vector<GroupRingElement>&);
    friend IdealCanonical span_of_ideal_elements(const FiniteAbelianGroup&, const ResidueRing&,
                                                 const std::vector<GroupRingElement>&);

    FiniteAbelianGroup group_;
    ResidueRing ring_;
    HowellForm span_;
};

/// Smallest ideal containing the given elements.
IdealCanonical close_under_group(const FiniteAbelianGroup& g, const ResidueRing& k,
                                 const std::vector<GroupRingElement>& gens);
/// Z/p^M-span of elements already known to span an ideal (unchecked).
IdealCanonical span_of_ideal_elements(const FiniteAbelianGroup& g, const ResidueRing& k,
                                      const std::vector<GroupRingElement>& elems);

IdealCanonical ideal_from_gens(const FiniteAbelianGroup& g, const ResidueRing& k,
                               const std::vector<GroupRingElement>& gens);
/// Same, taking the ring from the (non-empty) generator list.
IdealCanonical ideal_from_gens(const std::vector<GroupRingElement>& gens);
IdealCanonical principal_ideal(const GroupRingElement& x);

/// A short list of ring generators (greedy; not necessarily minimal).
std::vector<GroupRingElement> ideal_generators(const IdealCanonical& I);

IdealCanonical ideal_sum(const IdealCanonical& I, const IdealCanonical& J);
IdealCanonical ideal_product(const IdealCanonical& I, const IdealCanonical& J);
IdealCanonical ideal_power(const IdealCanonical& I, unsigned n);
/// d * I.
IdealCanonical ideal_scale(const IdealCanonical& I, const GroupRingElement& d);
bool ideal_contains(const IdealCanonical& big, const IdealCanonical& small);

/// Compares the images of I and J in R/(1 + j), the minus quotient.
bool minus_ideal_eq(const IdealCanonical& I, const IdealCanonical& J, const GroupElement& j);

/// (1/denominator) * numerator inside the total ring of fractions.
struct FractionalIdeal {
    IdealCanonical numerator;
    GroupRingElement denominator;
    /// False when the denominator is a zero divisor of the working ring, in
    /// which case comparisons only hold as projections of an equality that
    /// lives in a larger ring.
    bool denominator_regular;
};

FractionalIdeal make_fractional(IdealCanonical numerator, GroupRingElement denominator);

struct FracIdealComparison {
    bool equal = false;
    /// Set when either denominator is a zero divisor at this level.
    bool projected = false;
};

/// Cross-multiplied comparison d2 * I1 == d1 * I2.
FracIdealComparison frac_ideal_eq(const FractionalIdeal& a, const FractionalIdeal& b);

} // namespace fforge
