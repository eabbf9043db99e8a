#include "fforge/group_ring.hpp"

#include <sstream>

namespace fforge {

GroupRingElement norm_of_subgroup(const FiniteAbelianGroup& g, const ResidueRing& k, std::span<const int> subgroup) {
    GroupRingElement x = gr_zero(g, k);
    for (int h : subgroup)
        x.set(h, 1);
    return x;
}

GroupRingElement norm_element(const FiniteAbelianGroup& g, const ResidueRing& k,
                              const std::vector<GroupElement>& subgroup_generators) {
    std::vector<int> gens;
    for (const auto& e : subgroup_generators) {
        if (!(e.group() == g))
            throw std::invalid_argument("norm_element: generator outside the group");
        gens.push_back(e.index());
    }
    return norm_of_subgroup(g, k, g.subgroup(gens));
}

std::vector<GroupRingElement> aug_ideal_gens(const ResidueRing& k, const std::vector<GroupElement>& subgroup_generators) {
    std::vector<GroupRingElement> out;
    for (const auto& e : subgroup_generators)
        out.push_back(gr_basis(e.group(), k, e.index()) - gr_one(e.group(), k));
    return out;
}

ZmodMatrix multiplication_matrix(const GroupRingElement& x) {
    const auto& g = x.group();
    const int n = g.order();
    ZmodMatrix m(residue_ring(x), n, n);
    for (int h = 0; h < n; ++h)
        for (int i = 0; i < n; ++i)
            if (x[i] != 0)
                m.set(h, g.op(h, i), x[i]);
    return m;
}

std::optional<GroupRingElement> unit_inverse(const GroupRingElement& x) {
    const int n = x.group().order();
    const ResidueRing& k = residue_ring(x);
    ZmodMatrix mx = multiplication_matrix(x);
    HowellBuilder b(k, 2 * static_cast<std::size_t>(n));
    std::vector<Residue> row(2 * n);
    for (int i = 0; i < n; ++i) {
        std::fill(row.begin(), row.end(), 0);
        std::copy(mx.row(i).begin(), mx.row(i).end(), row.begin());
        row[n + i] = 1;
        b.add(row);
    }
    HowellForm h = b.finish();
    if (h.rank() < static_cast<std::size_t>(n))
        return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (h.pivot_column(i) != static_cast<std::size_t>(i) || h.matrix()(i, i) != 1)
            return std::nullopt;
    auto r0 = h.matrix().row(0).subspan(n);
    return gr_from(x.group(), k, std::vector<Residue>(r0.begin(), r0.end()));
}

bool is_unit(const GroupRingElement& x) {
    HowellForm h = howell(multiplication_matrix(x));
    return h.log_size() == static_cast<std::int64_t>(residue_ring(x).exponent()) * x.group().order();
}

bool is_zero_divisor(const GroupRingElement& x) {
    return kernel_basis(multiplication_matrix(x)).rows() > 0;
}

GroupRingElement lift_unit(const GroupHom& pi, const GroupRingElement& u) {
    if (!(u.group() == pi.target()))
        throw std::invalid_argument("lift_unit: unit does not live on the target group");
    if (!pi.is_surjective())
        throw std::invalid_argument("lift_unit: homomorphism is not surjective");
    const ResidueRing& k = residue_ring(u);
    std::int64_t kernel = pi.kernel_order();
    while (kernel % k.prime() == 0)
        kernel /= k.prime();
    if (kernel != 1)
        throw std::invalid_argument("lift_unit: kernel is not a p-group");
    if (!is_unit(u))
        throw std::invalid_argument("lift_unit: element is not a unit");

    const auto& src = pi.source();
    std::vector<int> preimage(pi.target().order(), -1);
    for (int s = 0; s < src.order(); ++s)
        if (preimage[pi(s)] < 0)
            preimage[pi(s)] = s;
    GroupRingElement lift = gr_zero(src, k);
    for (int t = 0; t < pi.target().order(); ++t)
        lift.set(preimage[t], u[t]);

    if (!(restrict_element(pi, lift) == u) || !is_unit(lift))
        throw std::logic_error("lift_unit: lifted element failed verification");
    return lift;
}

std::string to_string(const GroupRingElement& x) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < x.group().order(); ++i) {
        if (x[i] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << x[i];
        if (i != 0) {
            os << "*g(";
            auto r = x.group().residues_of(i);
            for (std::size_t j = 0; j < r.size(); ++j)
                os << (j ? "," : "") << r[j];
            os << ")";
        }
    }
    if (first)
        os << "0";
    return os.str();
}

} // namespace fforge
