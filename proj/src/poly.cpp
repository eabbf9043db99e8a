#include "fforge/poly.hpp"

#include "fforge/laplace.hpp"

#include <sstream>

namespace fforge {

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = 0, db = 0;
    for (auto e : a)
        da += e;
    for (auto e : b)
        db += e;
    if (da != db)
        return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] < b[i];
    return false;
}

SparsePoly SparsePoly::constant(std::size_t k, const BigInt& c) {
    SparsePoly p(k);
    p.add_term(Monomial(2 * k, 0), c);
    return p;
}

SparsePoly SparsePoly::x(std::size_t k, std::size_t i) {
    if (i < 1 || i > k)
        throw std::invalid_argument("SparsePoly::x: index out of range");
    Monomial m(2 * k, 0);
    m[i - 1] = 1;
    SparsePoly p(k);
    p.add_term(m, 1);
    return p;
}

SparsePoly SparsePoly::y(std::size_t k, std::size_t i) {
    if (i < 1 || i > k)
        throw std::invalid_argument("SparsePoly::y: index out of range");
    Monomial m(2 * k, 0);
    m[k + i - 1] = 1;
    SparsePoly p(k);
    p.add_term(m, 1);
    return p;
}

void SparsePoly::check(const SparsePoly& o) const {
    if (k_ != o.k_)
        throw std::invalid_argument("SparsePoly: variable count mismatch");
}

void SparsePoly::add_term(const Monomial& m, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(a.k_);
    Monomial m(2 * a.k_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool constant = true;
        for (auto e : m)
            constant = constant && e == 0;
        if (constant) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (mag != 1) {
            os << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            os << (need_star ? "*" : "") << (i < k_ ? "x" : "y") << (i < k_ ? i + 1 : i - k_ + 1);
            if (m[i] > 1)
                os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

PolyMatrix generic_Q(std::size_t k) {
    if (k < 1 || k > 6)
        throw std::invalid_argument("generic_Q: k must lie in [1, 6]");
    PolyMatrix q(k, std::vector<SparsePoly>(k * (k - 1) / 2, SparsePoly(k)));
    std::size_t col = 0;
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j, ++col) {
            q[i - 1][col] = -SparsePoly::x(k, j);
            q[j - 1][col] = SparsePoly::x(k, i);
        }
    return q;
}

PolyMatrix generic_A(std::size_t k) {
    auto q = generic_Q(k);
    PolyMatrix a(k, std::vector<SparsePoly>(k + q[0].size(), SparsePoly(k)));
    for (std::size_t i = 0; i < k; ++i) {
        a[i][i] = SparsePoly::y(k, i + 1);
        for (std::size_t j = 0; j < q[i].size(); ++j)
            a[i][k + j] = q[i][j];
    }
    return a;
}

std::vector<SparsePoly> poly_minors(const PolyMatrix& m, std::size_t cols, std::size_t k) {
    const std::size_t vars = m.empty() || m[0].empty() ? 0 : m[0][0].vars();
    return laplace_minors(
        m.size(), cols, k, [&](std::size_t i, std::size_t j) -> const SparsePoly& { return m[i][j]; },
        SparsePoly(vars), SparsePoly::constant(vars, 1));
}

SparsePoly poly_determinant(const PolyMatrix& m) {
    if (m.empty())
        throw std::invalid_argument("poly_determinant: empty matrix");
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("poly_determinant: matrix is not square");
    return poly_minors(m, m.size(), m.size()).front();
}

bool verify_minQ_zero(std::size_t k) {
    if (k < 1 || k > 5)
        throw std::invalid_argument("verify_minQ_zero: k must lie in [1, 5]");
    auto q = generic_Q(k);
    const std::size_t cols = q[0].size();
    if (cols < k)
        return true;
    for (const auto& f : poly_minors(q, cols, k))
        if (!f.is_zero())
            return false;
    return true;
}

bool row_annihilation_check(std::size_t k) {
    auto q = generic_Q(k);
    for (std::size_t j = 0; j < q[0].size(); ++j) {
        SparsePoly s(k);
        for (std::size_t i = 0; i < k; ++i)
            s += SparsePoly::x(k, i + 1) * q[i][j];
        if (!s.is_zero())
            return false;
    }
    return true;
}

MonomialReport classify_minor_monomials(std::size_t k) {
    if (k < 1 || k > 4)
        throw std::invalid_argument("classify_minor_monomials: k must lie in [1, 4]");
    auto a = generic_A(k);
    const std::size_t cols = a[0].size();
    auto col_sets = combinations(cols, k);
    auto dets = poly_minors(a, cols, k);
    Monomial product(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        product[k + i] = 1;

    MonomialReport rep;
    rep.k = k;
    for (std::size_t idx = 0; idx < dets.size(); ++idx) {
        MinorClassification mc;
        mc.columns = col_sets[idx];
        for (const auto& [m, c] : dets[idx].terms()) {
            (void)c;
            if (m == product) {
                ++mc.product_terms;
                continue;
            }
            bool divisible = false;
            for (std::size_t i = 0; i < k && !divisible; ++i)
                divisible = m[i] >= 1 && m[k + i] >= 1;
            if (divisible)
                ++mc.divisible_terms;
            else
                ++mc.escapes;
        }
        if (dets[idx].is_zero())
            ++rep.zero_minors;
        rep.product_terms += mc.product_terms;
        rep.divisible_terms += mc.divisible_terms;
        rep.escapes += mc.escapes;
        rep.minors.push_back(std::move(mc));
    }
    return rep;
}

std::string MonomialReport::to_text() const {
    std::ostringstream os;
    os << "k=" << k << " minors=" << minors.size() << " zero=" << zero_minors << " product=" << product_terms
       << " divisible=" << divisible_terms << " escapes=" << escapes << "\n";
    for (std::size_t i = 0; i < minors.size(); ++i) {
        const auto& mc = minors[i];
        os << "  minor " << i << " cols=(";
        for (std::size_t j = 0; j < mc.columns.size(); ++j)
            os << (j ? "," : "") << mc.columns[j] + 1;
        os << ") product=" << mc.product_terms << " divisible=" << mc.divisible_terms << " escapes=" << mc.escapes
           << "\n";
    }
    return os.str();
}

GroupRingElement specialize(const SparsePoly& f, const std::vector<GroupRingElement>& xs,
                            const std::vector<GroupRingElement>& ys) {
    const std::size_t k = f.vars();
    if (xs.size() != k || ys.size() != k || k == 0)
        throw std::invalid_argument("specialize: need k images for each variable family");
    const auto& g = xs.front().group();
    const auto& ring = residue_ring(xs.front());
    auto acc = gr_zero(g, ring);
    for (const auto& [m, c] : f.terms()) {
        BigInt red = c % ring.modulus();
        if (red < 0)
            red += ring.modulus();
        auto term = gr_one(g, ring).scaled(static_cast<Residue>(red));
        for (std::size_t i = 0; i < k; ++i) {
            if (m[i])
                term *= xs[i].pow(m[i]);
            if (m[k + i])
                term *= ys[i].pow(m[k + i]);
        }
        acc += term;
    }
    return acc;
}

} // namespace fforge
