#include "fforge/resolution.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace fforge {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

// log_p(x) when x is a power of p, otherwise -1
int log_p(std::int64_t x, std::int64_t p) {
    int e = 0;
    while (x > 1 && x % p == 0) {
        x /= p;
        ++e;
    }
    return x == 1 ? e : -1;
}

int g_order(const DecompositionModel& model, const std::vector<int>& residues) {
    FiniteAbelianGroup g(model.group_orders);
    if (residues.size() != g.factor_count())
        throw std::invalid_argument("model: element has the wrong number of residues");
    for (std::size_t i = 0; i < residues.size(); ++i)
        if (residues[i] < 0 || residues[i] >= model.group_orders[i])
            throw std::invalid_argument("model: residue out of range");
    return g.element_order(g.index_of(residues));
}

GroupRingElement element_minus_one(const FiniteAbelianGroup& g, const ResidueRing& k, int index) {
    return gr_basis(g, k, index) - gr_one(g, k);
}

GroupRingElement geometric_sum(const FiniteAbelianGroup& g, const ResidueRing& k, int base, std::int64_t count) {
    GroupRingElement x = gr_zero(g, k);
    int cur = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        x.set(cur, k.add(x[cur], 1));
        cur = g.op(cur, base);
    }
    return x;
}

int gamma_power_index(const FiniteAbelianGroup& g, std::int64_t exponent) {
    std::vector<int> res(g.factor_count(), 0);
    int last = g.cyclic_orders().back();
    res.back() = static_cast<int>(exponent % last);
    return g.index_of(res);
}

// the largest p-power element order inside a subgroup, as an exponent
int max_p_exponent(const FiniteAbelianGroup& g, const std::vector<int>& sub, std::int64_t p) {
    int best = 0;
    for (int h : sub) {
        std::int64_t o = g.element_order(h);
        int e = 0;
        while (o % p == 0) {
            o /= p;
            ++e;
        }
        best = std::max(best, e);
    }
    return best;
}

} // namespace

FiniteAbelianGroup level_group(const DecompositionModel& model, int level) {
    if (level < 0)
        throw std::invalid_argument("level_group: negative level");
    auto orders = model.group_orders;
    orders.push_back(static_cast<int>(ipow(model.p, level)));
    return FiniteAbelianGroup(orders);
}

int torsion_index(const FiniteAbelianGroup& level_g, const std::vector<int>& residues) {
    auto r = residues;
    r.push_back(0);
    return level_g.index_of(r);
}

int y_index(const DecompositionModel& model, const FiniteAbelianGroup& level_g) {
    auto r = model.y_torsion;
    r.push_back(static_cast<int>(model.t % level_g.cyclic_orders().back()));
    return level_g.index_of(r);
}

int least_valid_level(const DecompositionModel& model) {
    int s = log_p(model.t, model.p);
    int a = log_p(g_order(model, model.y_torsion), model.p);
    if (s < 0)
        throw std::invalid_argument("model: t must be a power of p");
    if (a < 0)
        throw std::invalid_argument("model: torsion part of y must have p-power order");
    return s + a;
}

void validate_model(const DecompositionModel& model) {
    if (!is_prime(model.p))
        throw std::invalid_argument("model: p is not prime");
    for (int d : model.group_orders)
        if (d < 2)
            throw std::invalid_argument("model: cyclic orders must be at least 2");
    int least = least_valid_level(model);
    if (model.level_n < 1 || model.level_n > model.level_m)
        throw std::invalid_argument("model: levels must satisfy 1 <= n <= m");
    if (model.level_n < least)
        throw std::invalid_argument("model: gamma^(p^n) does not lie in <y> (least valid n is " +
                                    std::to_string(least) + ")");
    if (model.t > ipow(model.p, model.level_m))
        throw std::invalid_argument("model: t must divide p^m");
    for (const auto& gi : model.torsion_generators)
        if (g_order(model, gi) == 1)
            throw std::invalid_argument("model: torsion generator is the identity");

    auto gm = level_group(model, model.level_m);
    std::vector<int> gens;
    std::int64_t product = gm.element_order(y_index(model, gm));
    for (const auto& gi : model.torsion_generators) {
        gens.push_back(torsion_index(gm, gi));
        product *= gm.element_order(gens.back());
    }
    gens.push_back(y_index(model, gm));
    if (static_cast<std::int64_t>(gm.subgroup(gens).size()) != product)
        throw std::invalid_argument("model: generators do not form an internal direct product");
}

GrMatrix build_Q_matrix(const std::vector<GroupRingElement>& beta) {
    if (beta.empty())
        throw std::invalid_argument("build_Q_matrix: empty beta list");
    const auto& g = beta.front().group();
    const auto& k = residue_ring(beta.front());
    const std::size_t r = beta.size();
    GrMatrix q(g, k, r, r * (r - 1) / 2);
    std::size_t col = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j, ++col) {
            q.set(i, col, -beta[j]);
            q.set(j, col, beta[i]);
        }
    return q;
}

GrMatrix build_A_matrix(const std::vector<GroupRingElement>& alpha, const std::vector<GroupRingElement>& beta) {
    if (alpha.size() != beta.size() || alpha.empty())
        throw std::invalid_argument("build_A_matrix: need r >= 1 alphas and betas");
    const std::size_t r = alpha.size();
    GrMatrix q = build_Q_matrix(beta);
    GrMatrix a(q.group(), q.ring(), r, r + q.cols());
    for (std::size_t i = 0; i < r; ++i)
        a.set(i, i, alpha[i]);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            a.set(i, r + j, q(i, j));
    return a;
}

ResolutionData build_A_Q_at(const DecompositionModel& model, int M, int level_m) {
    DecompositionModel mm = model;
    mm.level_m = level_m;
    validate_model(mm);
    ResidueRing k(model.p, M);
    auto gn = level_group(mm, mm.level_n);
    auto gm = level_group(mm, mm.level_m);

    std::vector<GroupRingElement> alpha, beta, la, lb;
    for (const auto& gi : mm.torsion_generators) {
        int hn = torsion_index(gn, gi), hm = torsion_index(gm, gi);
        alpha.push_back(norm_of_subgroup(gn, k, gn.subgroup(std::vector<int>{hn})));
        beta.push_back(element_minus_one(gn, k, hn));
        la.push_back(norm_of_subgroup(gm, k, gm.subgroup(std::vector<int>{hm})));
        lb.push_back(element_minus_one(gm, k, hm));
    }
    int yn = y_index(mm, gn), ym = y_index(mm, gm);
    int ord_n = gn.element_order(yn);
    alpha.push_back(norm_of_subgroup(gn, k, gn.subgroup(std::vector<int>{yn})));
    beta.push_back(element_minus_one(gn, k, yn));
    la.push_back(geometric_sum(gm, k, ym, ord_n));
    lb.push_back(element_minus_one(gm, k, ym));

    auto d = element_minus_one(gm, k, gamma_power_index(gm, ipow(mm.p, mm.level_n)));
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!(alpha[i] * beta[i]).is_zero())
            throw std::logic_error("build_A_Q: alpha_i * beta_i != 0 at level n");
    for (std::size_t i = 0; i + 1 < la.size(); ++i)
        if (!(la[i] * lb[i]).is_zero())
            throw std::logic_error("build_A_Q: lifted alpha_i * beta_i != 0");
    if (!(la.back() * lb.back() == d))
        throw std::logic_error("build_A_Q: lifted alpha_r * beta_r != gamma^(p^n) - 1");

    GrMatrix a = build_A_matrix(alpha, beta);
    GrMatrix q = build_Q_matrix(beta);
    GrMatrix al = build_A_matrix(la, lb);
    int least = least_valid_level(mm);
    return ResolutionData{mm,         k, gn, gm, std::move(alpha), std::move(beta), std::move(la), std::move(lb),
                          std::move(a), std::move(q), std::move(al), std::move(d), least};
}

ResolutionData build_A_Q(const DecompositionModel& model, int M) { return build_A_Q_at(model, M, model.level_m); }

bool resolution_exact(const ResolutionData& res) {
    const std::size_t r = res.A.rows();
    std::vector<GrVector> columns;
    for (std::size_t j = 0; j < res.A.cols(); ++j) {
        GrVector v;
        for (std::size_t i = 0; i < r; ++i)
            v.push_back(res.A(i, j));
        columns.push_back(std::move(v));
    }
    auto image = flatten_module_span(columns, res.group_n, res.ring, r);
    auto kernel = howell(kernel_basis(flatten_row_map(res.beta)));
    return image == kernel;
}

FractionalIdeal shifted_fitt1_alternating(const ResolutionData& res) {
    if (res.model.level_n >= res.model.level_m)
        throw std::invalid_argument("shifted_fitt1_alternating: needs n < m");
    const std::size_t r = res.A_lift.rows();
    const auto& g = res.group_m;
    auto sum = IdealCanonical::zero(g, res.ring);
    for (std::size_t e = 0; e <= r; ++e) {
        auto min_e = ideal_from_gens(g, res.ring, minors(res.A_lift, e));
        sum = ideal_sum(sum, ideal_scale(min_e, res.gamma_term.pow(static_cast<unsigned>(r - e))));
    }
    return make_fractional(std::move(sum), res.gamma_term);
}

std::vector<RminorPattern> rminor_patterns(std::size_t r) {
    if (r == 0 || r > 16)
        throw std::invalid_argument("rminor_patterns: r out of range");
    std::vector<RminorPattern> out;
    RminorPattern full;
    full.full_product = true;
    full.in_L.assign(r - 1, true);
    full.t.assign(r, 0);
    out.push_back(full);
    const std::uint32_t all = (1u << (r - 1)) - 1;
    for (std::uint32_t mask = 0; mask < all; ++mask) {
        std::vector<bool> in_L(r - 1);
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i + 1 < r; ++i) {
            in_L[i] = (mask >> i) & 1u;
            if (!in_L[i])
                free.push_back(i);
        }
        free.push_back(r - 1);
        const int total = static_cast<int>(r) - std::popcount(mask) - 1;
        std::vector<int> t(r, 0);
        // enumerate compositions of total over the free slots, last slot >= 1
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
            if (pos + 1 == free.size()) {
                if (left >= 1) {
                    t[free[pos]] = left;
                    out.push_back(RminorPattern{false, in_L, t});
                    t[free[pos]] = 0;
                }
                return;
            }
            for (int v = 0; v <= left; ++v) {
                t[free[pos]] = v;
                rec(pos + 1, left - v);
            }
            t[free[pos]] = 0;
        };
        rec(0, total);
    }
    return out;
}

IdealCanonical rminor_ideal_explicit(const ResolutionData& res) {
    const auto& a = res.lifted_alpha;
    const auto& b = res.lifted_beta;
    const std::size_t r = a.size();
    std::vector<GroupRingElement> gens;
    for (const auto& pat : rminor_patterns(r)) {
        auto x = gr_one(res.group_m, res.ring);
        if (pat.full_product) {
            for (const auto& ai : a)
                x *= ai;
        } else {
            x *= a[r - 1];
            for (std::size_t i = 0; i < r; ++i) {
                if (i + 1 < r && pat.in_L[i])
                    x *= a[i];
                else
                    x *= b[i].pow(static_cast<unsigned>(pat.t[i]));
            }
        }
        gens.push_back(std::move(x));
    }
    return ideal_from_gens(res.group_m, res.ring, gens);
}

FractionalIdeal rminor_fractional(const ResolutionData& res) {
    if (res.model.level_n >= res.model.level_m)
        throw std::invalid_argument("rminor_fractional: needs n < m");
    auto min_r = ideal_from_gens(res.group_m, res.ring, minors(res.A_lift, res.A_lift.rows()));
    return make_fractional(std::move(min_r), res.gamma_term);
}

std::vector<Decomposition> enumerate_decompositions(const DecompositionModel& model, std::size_t bound) {
    validate_model(model);
    auto gm = level_group(model, model.level_m);
    std::vector<int> gens;
    for (const auto& gi : model.torsion_generators)
        gens.push_back(torsion_index(gm, gi));
    auto T = gm.subgroup(gens);
    if (T.size() > bound)
        throw BoundExceeded("enumerate_decompositions: torsion part exceeds the enumeration bound");
    auto subs = all_subgroups(gm, T);
    const std::int64_t p = model.p;
    std::vector<Decomposition> out;
    for (const auto& A : subs)
        for (const auto& C : subs) {
            if (A.size() * C.size() != T.size())
                continue;
            std::vector<int> meet;
            std::set_intersection(A.begin(), A.end(), C.begin(), C.end(), std::back_inserter(meet));
            if (meet.size() != 1)
                continue;
            int rB = ell_rank(gm, C, static_cast<int>(p)) + 1;
            for (int ell : prime_factors(static_cast<std::int64_t>(C.size())))
                if (ell != p)
                    rB = std::max(rB, ell_rank(gm, C, ell));
            for (int a0 : A)
                if (log_p(gm.element_order(a0), p) >= 0)
                    out.push_back(Decomposition{A, C, a0, rB});
        }
    return out;
}

FractionalIdeal intrinsic_ideal(const DecompositionModel& model, int M, std::size_t bound) {
    auto decs = enumerate_decompositions(model, bound);
    auto gm = level_group(model, model.level_m);
    ResidueRing k(model.p, M);
    std::vector<int> gens;
    for (const auto& gi : model.torsion_generators)
        gens.push_back(torsion_index(gm, gi));
    auto T = gm.subgroup(gens);
    const int s = log_p(model.t, model.p);
    const int a_g = log_p(g_order(model, model.y_torsion), model.p);
    const int N = s + std::max(a_g, max_p_exponent(gm, T, model.p));
    if (N >= model.level_m)
        throw std::invalid_argument("intrinsic_ideal: level m must exceed " + std::to_string(N));
    auto dN = element_minus_one(gm, k, gamma_power_index(gm, ipow(model.p, N)));
    const int y = y_index(model, gm);

    auto sum = IdealCanonical::zero(gm, k);
    for (const auto& d : decs) {
        auto nA = norm_of_subgroup(gm, k, d.A);
        int b0 = gm.op(d.a0, y);
        if (d.r_B >= 2) {
            std::vector<GroupRingElement> delta;
            for (int c : d.C)
                if (c != 0)
                    delta.push_back(element_minus_one(gm, k, c));
            delta.push_back(element_minus_one(gm, k, b0));
            auto power = ideal_power(ideal_from_gens(gm, k, delta), static_cast<unsigned>(d.r_B - 2));
            sum = ideal_sum(sum, ideal_scale(power, nA * dN));
        } else {
            // B procyclic: C is cyclic of order prime to p
            int c0 = 0;
            for (int c : d.C)
                if (gm.element_order(c) == static_cast<int>(d.C.size()))
                    c0 = c;
            int b = gm.op(c0, b0);
            std::int64_t count = static_cast<std::int64_t>(d.C.size()) * ipow(model.p, N - s);
            sum = ideal_sum(sum, principal_ideal(nA * geometric_sum(gm, k, b, count)));
        }
    }
    return make_fractional(std::move(sum), dN);
}

namespace {

FracIdealComparison both_routes(const DecompositionModel& model, int M, const FractionalIdeal& expected) {
    auto res = build_A_Q(model, M);
    auto a = frac_ideal_eq(shifted_fitt1_alternating(res), expected);
    auto b = frac_ideal_eq(intrinsic_ideal(model, M), expected);
    return FracIdealComparison{a.equal && b.equal, a.projected || b.projected};
}

} // namespace

FracIdealComparison rank_one_shape_check(const DecompositionModel& model, int M) {
    if (model.r() != 1)
        throw std::invalid_argument("rank_one_shape_check: needs r = 1");
    auto gm = level_group(model, model.level_m);
    ResidueRing k(model.p, M);
    int y = y_index(model, gm);
    auto denom = gr_one(gm, k) - gr_basis(gm, k, gm.inverse(y));
    return both_routes(model, M, make_fractional(IdealCanonical::unit(gm, k), denom));
}

FracIdealComparison cyclic_torsion_shape_check(const DecompositionModel& model, int M) {
    if (model.r() != 2)
        throw std::invalid_argument("cyclic_torsion_shape_check: needs r = 2");
    auto gm = level_group(model, model.level_m);
    ResidueRing k(model.p, M);
    int y = y_index(model, gm);
    int h = torsion_index(gm, model.torsion_generators.front());
    auto one_minus_y = gr_one(gm, k) - gr_basis(gm, k, y);
    auto nT = norm_of_subgroup(gm, k, gm.subgroup(std::vector<int>{h}));
    return both_routes(model, M, make_fractional(ideal_from_gens(gm, k, {one_minus_y, nT}), one_minus_y));
}

bool tower_fitt_compat(const DecompositionModel& model, int M, int m_lo, int m_hi) {
    if (m_lo > m_hi)
        throw std::invalid_argument("tower_fitt_compat: needs m_lo <= m_hi");
    auto lo = build_A_Q_at(model, M, m_lo);
    auto hi = build_A_Q_at(model, M, m_hi);
    std::vector<std::size_t> factors(lo.group_m.factor_count());
    for (std::size_t i = 0; i < factors.size(); ++i)
        factors[i] = i;
    auto pi = GroupHom::reduction(hi.group_m, lo.group_m, factors);
    Presentation p_lo{lo.A_lift}, p_hi{hi.A_lift};
    for (std::size_t e = 0; e <= lo.A_lift.rows(); ++e) {
        std::vector<GroupRingElement> images;
        for (const auto& x : ideal_generators(fitt(p_hi, e)))
            images.push_back(restrict_element(pi, x));
        if (!(ideal_from_gens(lo.group_m, lo.ring, images) == fitt(p_lo, e)))
            return false;
    }
    return true;
}

std::vector<DecompositionModel> default_catalog(int p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("default_catalog: p must be an odd prime");
    const std::string ps = std::to_string(p);
    auto make = [p](std::string name, std::vector<int> orders, std::vector<std::vector<int>> tors, std::vector<int> y) {
        DecompositionModel m;
        m.name = std::move(name);
        m.group_orders = std::move(orders);
        m.p = p;
        m.torsion_generators = std::move(tors);
        m.y_torsion = std::move(y);
        m.t = 1;
        m.level_n = 1;
        m.level_m = 2;
        return m;
    };
    return {
        make("r1-gamma", {2}, {}, {0}),
        make("r1-mixed", {p}, {}, {1}),
        make("r2-tor" + ps, {p}, {{1}}, {0}),
        make("r2-tor" + ps + "-mixed", {p}, {{1}}, {1}),
        make("r2-tor2", {2}, {{1}}, {0}),
        make("r2-cm", {2, p}, {{0, 1}}, {0, 0}),
        make("r3-tor" + ps + "x" + ps, {p, p}, {{1, 0}, {0, 1}}, {0, 0}),
    };
}

} // namespace fforge
