#include "fforge/ideal.hpp"

namespace fforge {

namespace {

void check_same_ring(const IdealCanonical& I, const IdealCanonical& J, const char* what) {
    if (!(I.group() == J.group()) || !(I.ring() == J.ring()))
        throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

void check_element(const FiniteAbelianGroup& g, const ResidueRing& k, const GroupRingElement& x, const char* what) {
    if (!(x.group() == g) || !(residue_ring(x) == k))
        throw std::invalid_argument(std::string(what) + ": element lives in a different ring");
}

} // namespace

IdealCanonical::IdealCanonical(FiniteAbelianGroup g, ResidueRing k, HowellForm span, Trusted)
    : group_(std::move(g)), ring_(k), span_(std::move(span)) {}

IdealCanonical::IdealCanonical(FiniteAbelianGroup g, ResidueRing k, HowellForm span)
    : group_(std::move(g)), ring_(k), span_(std::move(span)) {
    if (span_.cols() != static_cast<std::size_t>(group_.order()) || !(span_.ring() == ring_))
        throw std::invalid_argument("IdealCanonical: span does not match the group ring");
    for (const auto& r : rows())
        for (std::size_t f = 0; f < group_.factor_count(); ++f) {
            auto moved = r.shifted(group_.generator(f));
            if (!span_.contains(moved.coefficients()))
                throw std::invalid_argument("IdealCanonical: span is not closed under the group action");
        }
}

IdealCanonical IdealCanonical::zero(const FiniteAbelianGroup& g, const ResidueRing& k) {
    return IdealCanonical(g, k, HowellBuilder(k, g.order()).finish(), Trusted{});
}

IdealCanonical IdealCanonical::unit(const FiniteAbelianGroup& g, const ResidueRing& k) {
    return close_under_group(g, k, {gr_one(g, k)});
}

std::vector<GroupRingElement> IdealCanonical::rows() const {
    std::vector<GroupRingElement> out;
    const auto& m = span_.matrix();
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(gr_from(group_, ring_, std::vector<Residue>(m.row(i).begin(), m.row(i).end())));
    return out;
}

bool IdealCanonical::contains(const GroupRingElement& x) const {
    check_element(group_, ring_, x, "IdealCanonical::contains");
    return span_.contains(x.coefficients());
}

bool IdealCanonical::is_unit_ideal() const { return contains(gr_one(group_, ring_)); }

IdealCanonical close_under_group(const FiniteAbelianGroup& g, const ResidueRing& k,
                                 const std::vector<GroupRingElement>& gens) {
    HowellBuilder b(k, g.order());
    std::vector<GroupRingElement> queue;
    for (const auto& x : gens) {
        check_element(g, k, x, "ideal_from_gens");
        queue.push_back(x);
    }
    std::vector<int> moves;
    for (std::size_t f = 0; f < g.factor_count(); ++f)
        moves.push_back(g.generator(f));
    // only vectors that enlarged the span need their translates queued
    while (!queue.empty()) {
        GroupRingElement v = std::move(queue.back());
        queue.pop_back();
        if (!b.add(v.coefficients()))
            continue;
        for (int h : moves)
            queue.push_back(v.shifted(h));
    }
    return IdealCanonical(g, k, b.finish(), IdealCanonical::Trusted{});
}

IdealCanonical span_of_ideal_elements(const FiniteAbelianGroup& g, const ResidueRing& k,
                                      const std::vector<GroupRingElement>& elems) {
    HowellBuilder b(k, g.order());
    for (const auto& x : elems) {
        check_element(g, k, x, "span_of_ideal_elements");
        b.add(x.coefficients());
    }
    return IdealCanonical(g, k, b.finish(), IdealCanonical::Trusted{});
}

IdealCanonical ideal_from_gens(const FiniteAbelianGroup& g, const ResidueRing& k,
                               const std::vector<GroupRingElement>& gens) {
    return close_under_group(g, k, gens);
}

IdealCanonical ideal_from_gens(const std::vector<GroupRingElement>& gens) {
    if (gens.empty())
        throw std::invalid_argument("ideal_from_gens: empty generator list needs an explicit ring");
    return close_under_group(gens.front().group(), residue_ring(gens.front()), gens);
}

IdealCanonical principal_ideal(const GroupRingElement& x) { return ideal_from_gens({x}); }

std::vector<GroupRingElement> ideal_generators(const IdealCanonical& I) {
    std::vector<GroupRingElement> gens;
    IdealCanonical sofar = IdealCanonical::zero(I.group(), I.ring());
    for (const auto& r : I.rows()) {
        if (sofar.contains(r))
            continue;
        gens.push_back(r);
        sofar = close_under_group(I.group(), I.ring(), gens);
        if (sofar == I)
            break;
    }
    return gens;
}

IdealCanonical ideal_sum(const IdealCanonical& I, const IdealCanonical& J) {
    check_same_ring(I, J, "ideal_sum");
    auto elems = I.rows();
    for (auto& r : J.rows())
        elems.push_back(std::move(r));
    return span_of_ideal_elements(I.group(), I.ring(), elems);
}

IdealCanonical ideal_product(const IdealCanonical& I, const IdealCanonical& J) {
    check_same_ring(I, J, "ideal_product");
    // the Z/p^M-rows of I are closed under G, so rows(I) * gens(J) already
    // spans the product ideal
    const auto& small = I.howell().rank() <= J.howell().rank() ? I : J;
    const auto& big = I.howell().rank() <= J.howell().rank() ? J : I;
    auto gens = ideal_generators(small);
    std::vector<GroupRingElement> elems;
    for (const auto& a : big.rows())
        for (const auto& b : gens)
            elems.push_back(a * b);
    return span_of_ideal_elements(I.group(), I.ring(), elems);
}

IdealCanonical ideal_power(const IdealCanonical& I, unsigned n) {
    IdealCanonical out = IdealCanonical::unit(I.group(), I.ring());
    for (unsigned i = 0; i < n; ++i)
        out = ideal_product(out, I);
    return out;
}

IdealCanonical ideal_scale(const IdealCanonical& I, const GroupRingElement& d) {
    check_element(I.group(), I.ring(), d, "ideal_scale");
    std::vector<GroupRingElement> elems;
    for (const auto& r : I.rows())
        elems.push_back(r * d);
    return span_of_ideal_elements(I.group(), I.ring(), elems);
}

bool ideal_contains(const IdealCanonical& big, const IdealCanonical& small) {
    check_same_ring(big, small, "ideal_contains");
    for (const auto& r : small.rows())
        if (!big.contains(r))
            return false;
    return true;
}

bool minus_ideal_eq(const IdealCanonical& I, const IdealCanonical& J, const GroupElement& j) {
    check_same_ring(I, J, "minus_ideal_eq");
    if (!(j.group() == I.group()) || j.order() != 2)
        throw std::invalid_argument("minus_ideal_eq: j must be an element of order 2");
    if (I.ring().prime() == 2)
        throw std::invalid_argument("minus_ideal_eq: p = 2 is not supported");
    auto plus = principal_ideal(gr_one(I.group(), I.ring()) + gr_basis(I.group(), I.ring(), j.index()));
    return ideal_sum(I, plus) == ideal_sum(J, plus);
}

FractionalIdeal make_fractional(IdealCanonical numerator, GroupRingElement denominator) {
    check_element(numerator.group(), numerator.ring(), denominator, "make_fractional");
    if (denominator.is_zero())
        throw std::invalid_argument("make_fractional: zero denominator");
    bool regular = !is_zero_divisor(denominator);
    return FractionalIdeal{std::move(numerator), std::move(denominator), regular};
}

FracIdealComparison frac_ideal_eq(const FractionalIdeal& a, const FractionalIdeal& b) {
    check_same_ring(a.numerator, b.numerator, "frac_ideal_eq");
    if (a.denominator.is_zero() || b.denominator.is_zero())
        throw std::invalid_argument("frac_ideal_eq: zero denominator");
    FracIdealComparison out;
    out.equal = ideal_scale(a.numerator, b.denominator) == ideal_scale(b.numerator, a.denominator);
    out.projected = !a.denominator_regular || !b.denominator_regular;
    return out;
}

} // namespace fforge
