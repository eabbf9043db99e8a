#include "doctest.h"
#include "oracles.hpp"

using namespace fforge;

namespace {

GrMatrix random_grmatrix(const FiniteAbelianGroup& g, const ResidueRing& k, std::size_t r, std::size_t c,
                         std::mt19937_64& rng, bool sparse = false) {
    GrMatrix m(g, k, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            auto x = oracle::random_element(g, k, rng);
            if (sparse && rng() % 3 == 0)
                x = gr_zero(g, k);
            else if (sparse && rng() % 2)
                x = x.scaled(k.prime());
            m.set(i, j, x);
        }
    return m;
}

GrMatrix diag(const GroupRingElement& x, const GroupRingElement& y) {
    GrMatrix m(x.group(), residue_ring(x), 2, 2);
    m.set(0, 0, x);
    m.set(1, 1, y);
    return m;
}

} // namespace

TEST_CASE("minors: examples and Leibniz oracle") {
    ResidueRing k(3, 2);
    FiniteAbelianGroup g({3});
    auto x = gr_basis(g, k, 1) - gr_one(g, k), y = gr_basis(g, k, 2).scaled(3) + gr_one(g, k);
    auto d = diag(x, y);
    CHECK(minors(d, 0) == std::vector{gr_one(g, k)});
    CHECK(minors(d, 2) == std::vector{x * y});
    CHECK(minors(d, 1).size() == 4);
    CHECK_THROWS(minors(d, 3));

    // Q_3 from betas: columns q12, q13, q23
    FiniteAbelianGroup h({3, 3, 3});
    std::vector<GroupRingElement> b;
    for (std::size_t i = 0; i < 3; ++i)
        b.push_back(gr_basis(h, k, h.generator(i)) - gr_one(h, k));
    GrMatrix q(h, k, 3, 3);
    int col = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j, ++col) {
            q.set(i, col, -b[j]);
            q.set(j, col, b[i]);
        }
    CHECK(determinant(q) == oracle::leibniz_det(q));
    CHECK(determinant(q).is_zero());

    std::mt19937_64 rng(1);
    FiniteAbelianGroup g6({2, 3});
    for (int t = 0; t < 10; ++t) {
        auto m = random_grmatrix(g6, k, 4, 4, rng, true);
        CHECK(determinant(m) == oracle::leibniz_det(m));
        CHECK(determinant(m.transposed()) == determinant(m));
    }
    // every 2-minor of a 3x4 matrix against the Leibniz oracle on the submatrix
    auto m = random_grmatrix(g6, k, 3, 4, rng);
    auto all = minors(m, 2);
    std::size_t idx = 0;
    for (std::size_t r0 = 0; r0 < 3; ++r0)
        for (std::size_t r1 = r0 + 1; r1 < 3; ++r1)
            for (std::size_t c0 = 0; c0 < 4; ++c0)
                for (std::size_t c1 = c0 + 1; c1 < 4; ++c1) {
                    GrMatrix s(g6, k, 2, 2);
                    s.set(0, 0, m(r0, c0));
                    s.set(0, 1, m(r0, c1));
                    s.set(1, 0, m(r1, c0));
                    s.set(1, 1, m(r1, c1));
                    CHECK(all.at(idx++) == oracle::leibniz_det(s));
                }
    CHECK(idx == all.size());
}

TEST_CASE("fitt examples") {
    ResidueRing k(3, 1);
    FiniteAbelianGroup g({3});
    auto beta = gr_basis(g, k, 1) - gr_one(g, k);
    GrMatrix one_by_one(g, k, 1, 1);
    one_by_one.set(0, 0, beta);
    Presentation p{one_by_one};
    CHECK(fitt(p, 0) == principal_ideal(beta));
    CHECK(fitt(p, 1).is_unit_ideal());

    ResidueRing k9(3, 2);
    auto x = gr_basis(g, k9, 1) - gr_one(g, k9), y = gr_one(g, k9).scaled(3);
    Presentation d{diag(x, y)};
    CHECK(fitt(d, 0) == principal_ideal(x * y));
    CHECK(fitt(d, 1) == ideal_from_gens(g, k9, {x, y}));
    CHECK(fitt(d, 2).is_unit_ideal());

    GrMatrix wide(g, k9, 3, 1);
    wide.set(0, 0, x);
    CHECK(fitt(Presentation{wide}, 0).is_zero());
}

TEST_CASE("property: Fitting ideals") {
    std::mt19937_64 rng(7);
    ResidueRing k(3, 2);
    FiniteAbelianGroup g({2, 3});
    for (int t = 0; t < 12; ++t) {
        // ascending chain
        Presentation p{random_grmatrix(g, k, 3, 3 + t % 2, rng, true)};
        for (std::size_t e = 0; e < 3; ++e)
            CHECK(ideal_contains(fitt(p, e + 1), fitt(p, e)));

        // direct sums of 1x1 presentations
        Presentation a{random_grmatrix(g, k, 1, 1, rng, true)}, b{random_grmatrix(g, k, 1, 1, rng, true)};
        CHECK(fitt(direct_sum(a, b), 0) == ideal_product(fitt(a, 0), fitt(b, 0)));
        Presentation c{random_grmatrix(g, k, 2, 2, rng, true)};
        CHECK(fitt(direct_sum(a, c), 0) == ideal_product(fitt(a, 0), fitt(c, 0)));

        // quadratic presentations: Fitt_0 is generated by the determinant
        CHECK(fitt(c, 0) == principal_ideal(determinant(c.relations)));

        // base change along G -> Z/3
        FiniteAbelianGroup z3({3});
        auto pi = GroupHom::reduction(g, z3, {1});
        auto pushed = push_forward(p, pi);
        for (std::size_t e = 0; e < 3; ++e) {
            std::vector<GroupRingElement> images;
            for (const auto& r : ideal_generators(fitt(p, e)))
                images.push_back(restrict_element(pi, r));
            CHECK(ideal_from_gens(z3, k, images) == fitt(pushed, e));
        }
    }
}

TEST_CASE("transpose presentations") {
    ResidueRing k(3, 2);
    FiniteAbelianGroup g({2, 3});
    GrMatrix id(g, k, 2, 2);
    id.set(0, 0, gr_one(g, k));
    id.set(1, 1, gr_one(g, k));
    CHECK(transpose_presentation(Presentation{id}).relations == id);
    auto d = diag(gr_basis(g, k, 1) + gr_one(g, k), gr_basis(g, k, 4).scaled(3));
    CHECK(transpose_presentation(Presentation{d}).relations == d);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 5; ++t) {
        Presentation p{random_grmatrix(g, k, 3, 3, rng, true)};
        auto pt = transpose_presentation(p);
        for (std::size_t e = 0; e <= 3; ++e)
            CHECK(fitt(p, e) == fitt(pt, e));
    }
    CHECK_THROWS(transpose_presentation(Presentation{GrMatrix(g, k, 2, 3)}));
}

TEST_CASE("kernel generators") {
    SUBCASE("r = 1 over (Z/9)[Z/3]") {
        ResidueRing k(3, 2);
        FiniteAbelianGroup g({3});
        std::vector betas{gr_basis(g, k, 1) - gr_one(g, k)};
        auto v = kernel_generators(betas);
        REQUIRE(v.size() == 1);
        CHECK(v[0][0] == norm_of_subgroup(g, k, g.subgroup(std::vector<int>{1})));
        auto span = flatten_module_span(v, g, k, 1);
        CHECK(span == howell(kernel_basis(flatten_row_map(betas))));
    }
    SUBCASE("r = 2 over (Z/4)[Z/2 x Z/2]") {
        ResidueRing k(2, 2);
        FiniteAbelianGroup g({2, 2});
        std::vector betas{gr_basis(g, k, g.generator(0)) - gr_one(g, k), gr_basis(g, k, g.generator(1)) - gr_one(g, k)};
        auto v = kernel_generators(betas);
        REQUIRE(v.size() == 3);
        CHECK(v[2][0] == -betas[1]);
        CHECK(v[2][1] == betas[0]);
        auto span = flatten_module_span(v, g, k, 2);
        CHECK(span == howell(kernel_basis(flatten_row_map(betas))));
        // the brute-force kernel by enumeration of R^2 (4^8 vectors)
        std::set<std::vector<Residue>> brute;
        for (const auto& c : oracle::all_vectors(k, 8)) {
            auto y0 = gr_from(g, k, {c.begin(), c.begin() + 4});
            auto y1 = gr_from(g, k, {c.begin() + 4, c.end()});
            if ((y0 * betas[0] + y1 * betas[1]).is_zero())
                brute.insert(c);
        }
        CHECK(oracle::howell_elements(span) == brute);
    }
    SUBCASE("degenerate and invalid input") {
        CHECK(kernel_generators({}).empty());
        ResidueRing k(3, 2);
        FiniteAbelianGroup g({3});
        CHECK_THROWS(kernel_generators({gr_basis(g, k, 1)}));
        CHECK_THROWS(kernel_generators({gr_basis(g, k, 1) - gr_one(g, k), gr_basis(g, k, 2) - gr_one(g, k)}));
    }
}
