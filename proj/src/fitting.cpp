#include "fforge/fitting.hpp"

#include "fforge/laplace.hpp"

namespace fforge {

GrMatrix::GrMatrix(FiniteAbelianGroup g, ResidueRing k, std::size_t rows, std::size_t cols)
    : group_(std::move(g)), ring_(k), rows_(rows), cols_(cols), e_(rows * cols, gr_zero(group_, ring_)) {}

void GrMatrix::set(std::size_t i, std::size_t j, GroupRingElement x) {
    if (!(x.group() == group_) || !(residue_ring(x) == ring_))
        throw std::invalid_argument("GrMatrix: entry lives in a different ring");
    e_.at(i * cols_ + j) = std::move(x);
}

GrMatrix GrMatrix::transposed() const {
    GrMatrix t(group_, ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.set(j, i, (*this)(i, j));
    return t;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n)
        return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i)
        c[i] = i;
    for (;;) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return out;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j)
            c[j] = c[j - 1] + 1;
    }
}

std::vector<GroupRingElement> minors(const GrMatrix& m, std::size_t k) {
    return laplace_minors(
        m.rows(), m.cols(), k, [&](std::size_t i, std::size_t j) -> const GroupRingElement& { return m(i, j); },
        gr_zero(m.group(), m.ring()), gr_one(m.group(), m.ring()));
}

GroupRingElement determinant(const GrMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    return minors(m, m.rows()).front();
}

IdealCanonical fitt(const Presentation& pres, std::size_t e) {
    const auto& m = pres.relations;
    if (pres.target_rank() <= e)
        return IdealCanonical::unit(m.group(), m.ring());
    std::size_t k = pres.target_rank() - e;
    if (k > m.cols())
        return IdealCanonical::zero(m.group(), m.ring());
    return ideal_from_gens(m.group(), m.ring(), minors(m, k));
}

Presentation transpose_presentation(const Presentation& pres) {
    if (pres.relations.rows() != pres.relations.cols())
        throw std::invalid_argument("transpose_presentation: relation matrix must be square");
    return Presentation{pres.relations.transposed()};
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
    const auto& x = a.relations;
    const auto& y = b.relations;
    if (!(x.group() == y.group()) || !(x.ring() == y.ring()))
        throw std::invalid_argument("direct_sum: ring mismatch");
    GrMatrix m(x.group(), x.ring(), x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            m.set(i, j, x(i, j));
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            m.set(x.rows() + i, x.cols() + j, y(i, j));
    return Presentation{std::move(m)};
}

Presentation push_forward(const Presentation& pres, const GroupHom& pi) {
    const auto& x = pres.relations;
    GrMatrix m(pi.target(), x.ring(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            m.set(i, j, restrict_element(pi, x(i, j)));
    return Presentation{std::move(m)};
}

std::vector<GrVector> kernel_generators(const std::vector<GroupRingElement>& betas) {
    const std::size_t r = betas.size();
    if (r == 0)
        return {};
    const auto& g = betas.front().group();
    const auto& k = residue_ring(betas.front());
    std::vector<int> elems;
    std::int64_t product = 1;
    for (const auto& b : betas) {
        if (!(b.group() == g) || !(residue_ring(b) == k))
            throw std::invalid_argument("kernel_generators: betas live in different rings");
        // b must equal basis(h) - 1 for a single group element h
        int h = -1;
        for (int i = 1; i < g.order(); ++i)
            if (b[i] != 0) {
                if (h >= 0 || b[i] != 1)
                    throw std::invalid_argument("kernel_generators: beta is not of the form g - 1");
                h = i;
            }
        if (h < 0) {
            if (!b.is_zero())
                throw std::invalid_argument("kernel_generators: beta is not of the form g - 1");
            h = 0;
        } else if (b[0] != k.neg(1)) {
            throw std::invalid_argument("kernel_generators: beta is not of the form g - 1");
        }
        elems.push_back(h);
        product *= g.element_order(h);
    }
    if (static_cast<std::int64_t>(g.subgroup(elems).size()) != product)
        throw std::invalid_argument("kernel_generators: generators do not form a direct product");

    auto zero = gr_zero(g, k);
    std::vector<GrVector> out;
    for (std::size_t i = 0; i < r; ++i) {
        GrVector v(r, zero);
        v[i] = norm_of_subgroup(g, k, g.subgroup(std::vector<int>{elems[i]}));
        out.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            GrVector q(r, zero);
            q[i] = -betas[j];
            q[j] = betas[i];
            out.push_back(std::move(q));
        }
    return out;
}

ZmodMatrix flatten_row_map(const std::vector<GroupRingElement>& betas) {
    if (betas.empty())
        throw std::invalid_argument("flatten_row_map: empty beta list");
    const auto& g = betas.front().group();
    const auto& k = residue_ring(betas.front());
    const int n = g.order();
    ZmodMatrix m(k, betas.size() * n, n);
    for (std::size_t i = 0; i < betas.size(); ++i)
        for (int h = 0; h < n; ++h) {
            auto moved = betas[i].shifted(h);
            for (int c = 0; c < n; ++c)
                m.set(i * n + h, c, moved[c]);
        }
    return m;
}

HowellForm flatten_module_span(const std::vector<GrVector>& vectors, const FiniteAbelianGroup& g,
                               const ResidueRing& k, std::size_t r) {
    const int n = g.order();
    HowellBuilder b(k, r * n);
    std::vector<Residue> flat(r * n);
    for (const auto& v : vectors) {
        if (v.size() != r)
            throw std::invalid_argument("flatten_module_span: vector length mismatch");
        for (int h = 0; h < n; ++h) {
            for (std::size_t i = 0; i < r; ++i) {
                auto moved = v[i].shifted(h);
                std::copy(moved.coefficients().begin(), moved.coefficients().end(), flat.begin() + i * n);
            }
            b.add(flat);
        }
    }
    return b.finish();
}

} // namespace fforge
