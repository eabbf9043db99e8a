#include "doctest.h"
#include "oracles.hpp"

#include "fforge/poly.hpp"
#include "fforge/resolution.hpp"

using namespace fforge;

namespace {

SparsePoly random_poly(std::size_t k, std::mt19937_64& rng) {
    SparsePoly p(k);
    for (int t = 0; t < 4; ++t) {
        SparsePoly term = SparsePoly::constant(k, static_cast<int>(rng() % 7) - 3);
        for (int f = 0; f < 2; ++f)
            term = term * (rng() % 2 ? SparsePoly::x(k, 1 + rng() % k) : SparsePoly::y(k, 1 + rng() % k));
        p += term;
    }
    return p;
}

} // namespace

TEST_CASE("generic matrices") {
    auto q1 = generic_Q(1);
    CHECK(q1.size() == 1);
    CHECK(q1[0].empty());
    auto a1 = generic_A(1);
    REQUIRE(a1[0].size() == 1);
    CHECK(a1[0][0] == SparsePoly::y(1, 1));

    auto q2 = generic_Q(2);
    REQUIRE(q2[0].size() == 1);
    CHECK(q2[0][0] == -SparsePoly::x(2, 2));
    CHECK(q2[1][0] == SparsePoly::x(2, 1));

    auto q3 = generic_Q(3);
    CHECK(q3.size() == 3);
    CHECK(q3[0].size() == 3);
    // column q13 = -x3 e1 + x1 e3
    CHECK(q3[0][1] == -SparsePoly::x(3, 3));
    CHECK(q3[1][1].is_zero());
    CHECK(q3[2][1] == SparsePoly::x(3, 1));
    CHECK(generic_A(3)[0].size() == 6);
    CHECK_THROWS(generic_Q(0));
    CHECK_THROWS(generic_Q(7));
}

TEST_CASE("vanishing of the k-minors of Q_k") {
    CHECK(verify_minQ_zero(1));
    CHECK(verify_minQ_zero(2));
    CHECK(poly_determinant(generic_Q(3)).is_zero());
    auto q4 = generic_Q(4);
    auto m4 = poly_minors(q4, 6, 4);
    CHECK(m4.size() == 15);
    for (const auto& f : m4)
        CHECK(f.is_zero());
    for (std::size_t k = 1; k <= 5; ++k)
        CHECK(verify_minQ_zero(k));
    // the (k-1)-minors do not all vanish, so the check is not vacuous
    bool some_nonzero = false;
    for (const auto& f : poly_minors(q4, 6, 3))
        some_nonzero = some_nonzero || !f.is_zero();
    CHECK(some_nonzero);
}

TEST_CASE("row annihilation") {
    for (std::size_t k = 1; k <= 6; ++k)
        CHECK(row_annihilation_check(k));
}

TEST_CASE("monomial classification") {
    auto r1 = classify_minor_monomials(1);
    CHECK(r1.product_terms == 1);
    CHECK(r1.escapes == 0);

    auto r2 = classify_minor_monomials(2);
    // columns (y1 e1 | q12): minor y1 * x1
    PolyMatrix sub{{SparsePoly::y(2, 1), -SparsePoly::x(2, 2)}, {SparsePoly(2), SparsePoly::x(2, 1)}};
    CHECK(poly_determinant(sub) == SparsePoly::x(2, 1) * SparsePoly::y(2, 1));
    REQUIRE(r2.minors.size() == 3);
    CHECK(r2.minors[1].columns == std::vector<std::size_t>{0, 2});
    CHECK(r2.minors[1].divisible_terms == 1);

    for (std::size_t k = 1; k <= 4; ++k) {
        auto rep = classify_minor_monomials(k);
        CHECK(rep.escapes == 0);
        CHECK(rep.product_terms == 1);
        if (k > 1)
            CHECK(rep.divisible_terms > 0);
    }
    auto text = classify_minor_monomials(3).to_text();
    CHECK(text.rfind("k=3 minors=20", 0) == 0);
}

TEST_CASE("polynomial ring laws and printing") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        auto a = random_poly(3, rng), b = random_poly(3, rng), c = random_poly(3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == SparsePoly(3));
        CHECK(a * SparsePoly::constant(3, 1) == a);
    }
    auto f = SparsePoly::x(2, 1) * SparsePoly::x(2, 1) * SparsePoly::constant(2, 3) - SparsePoly::y(2, 2) +
             SparsePoly::constant(2, 5);
    CHECK(f.to_string() == "3*x1^2 - y2 + 5");
    CHECK(SparsePoly(2).to_string() == "0");
    CHECK_THROWS(SparsePoly::x(2, 1) + SparsePoly::x(3, 1));
}

TEST_CASE("specialization commutes with determinants") {
    // generic A_k specialized at the lifted alphas and betas of catalog models
    for (const auto& model : default_catalog()) {
        CAPTURE(model.name);
        auto res = build_A_Q(model, 2);
        const std::size_t k = model.r();
        auto a = generic_A(k);
        auto polys = poly_minors(a, a[0].size(), k);
        auto group_minors = minors(res.A_lift, k);
        REQUIRE(polys.size() == group_minors.size());
        for (std::size_t i = 0; i < polys.size(); ++i)
            CHECK(specialize(polys[i], res.lifted_beta, res.lifted_alpha) == group_minors[i]);
    }
    // random substitutions on square submatrices
    std::mt19937_64 rng(4);
    ResidueRing ring(3, 2);
    FiniteAbelianGroup g({3, 2});
    for (int t = 0; t < 5; ++t) {
        std::vector<GroupRingElement> xs, ys;
        for (int i = 0; i < 3; ++i) {
            xs.push_back(oracle::random_element(g, ring, rng));
            ys.push_back(oracle::random_element(g, ring, rng));
        }
        auto a = generic_A(3);
        PolyMatrix sq(3);
        GrMatrix gm(g, ring, 3, 3);
        std::vector<std::size_t> cols{static_cast<std::size_t>(rng() % 2), 2, 3 + rng() % 3};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                sq[i].push_back(a[i][cols[j]]);
                gm.set(i, j, specialize(a[i][cols[j]], xs, ys));
            }
        CHECK(specialize(poly_determinant(sq), xs, ys) == determinant(gm));
    }
}
