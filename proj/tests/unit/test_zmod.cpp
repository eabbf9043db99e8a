#include "doctest.h"
#include "oracles.hpp"

using namespace fforge;

TEST_CASE("residue ring basics") {
    ResidueRing k(3, 2);
    CHECK(k.modulus() == 9);
    CHECK(k.valuation(0) == 2);
    CHECK(k.valuation(6) == 1);
    CHECK(k.mul(k.inverse(2), 2) == 1);
    CHECK_THROWS_AS(k.inverse(3), std::domain_error);
    CHECK_THROWS(ResidueRing(4, 1));
    CHECK_THROWS(ResidueRing(3, 0));
}

TEST_CASE("howell form small examples") {
    ResidueRing k(3, 2);
    CHECK(howell(ZmodMatrix(k, 3, 2)).rank() == 0);
    auto id = ZmodMatrix::identity(k, 2);
    CHECK(howell(id).matrix() == id);

    ZmodMatrix m(k, 2, {{3, 0}, {0, 3}, {1, 1}});
    auto h = howell(m);
    CHECK(oracle::howell_elements(h) == oracle::enumerate_span(m));
    CHECK(oracle::enumerate_span(m).size() == 27);
}

TEST_CASE("span_eq and span_contains examples") {
    ResidueRing k(3, 2);
    ZmodMatrix a(k, 2, {{1, 0}});
    ZmodMatrix b(k, 2, {{2, 0}});
    CHECK(span_eq(a, a));
    CHECK(span_eq(a, b));
    CHECK(span_eq(ZmodMatrix(k, 2, {{3, 0}}), ZmodMatrix(k, 2, {{6, 0}})));
    CHECK_THROWS(span_eq(a, ZmodMatrix(k, 3, {{1, 0, 0}})));

    ZmodMatrix t(k, 2, {{3, 0}});
    CHECK(span_contains(t, std::vector<Residue>{0, 0}));
    CHECK(span_contains(t, std::vector<Residue>{6, 0}));
    CHECK_FALSE(span_contains(t, std::vector<Residue>{1, 0}));
    CHECK_THROWS(span_contains(t, std::vector<Residue>{1}));
}

TEST_CASE("kernel examples") {
    ResidueRing k(3, 2);
    CHECK(kernel_basis(ZmodMatrix::identity(k, 3)).rows() == 0);
    auto ker = kernel_basis(ZmodMatrix(k, 1, {{3}}));
    CHECK(ker == ZmodMatrix(k, 1, {{3}}));

    // multiplication by (g - 1) in (Z/9)[Z/3]
    FiniteAbelianGroup g({3});
    auto x = gr_basis(g, k, 1) - gr_one(g, k);
    auto km = kernel_basis(multiplication_matrix(x));
    std::set<std::vector<Residue>> brute;
    for (const auto& v : oracle::all_vectors(k, 3))
        if ((gr_from(g, k, v) * x).is_zero())
            brute.insert(v);
    CHECK(brute.size() == 9);
    CHECK(oracle::enumerate_span(km) == brute);
}

TEST_CASE("exhaustive agreement for tiny moduli") {
    std::mt19937_64 rng(11);
    for (auto [p, M] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {2, 3}}) {
        ResidueRing k(p, M);
        for (std::size_t cols = 1; cols <= 3; ++cols) {
            if (std::pow(k.modulus(), cols) > 20000)
                continue;
            auto all = oracle::all_vectors(k, cols);
            for (int trial = 0; trial < 12; ++trial) {
                auto a = oracle::random_matrix(k, 1 + trial % 3, cols, rng);
                auto b = oracle::random_matrix(k, 1 + (trial + 1) % 3, cols, rng);
                auto sa = oracle::enumerate_span(a);
                auto sb = oracle::enumerate_span(b);
                auto ha = howell(a);
                CHECK(oracle::howell_elements(ha) == sa);
                CHECK(span_eq(a, b) == (sa == sb));
                for (std::size_t i = 0; i < 6; ++i) {
                    const auto& v = all[rng() % all.size()];
                    CHECK(span_contains(a, v) == (sa.count(v) > 0));
                }
                CHECK(ha.log_size() == static_cast<std::int64_t>(std::lround(std::log(sa.size()) / std::log(p))));

                // kernel of a cols x cols matrix against brute force
                auto sq = oracle::random_matrix(k, cols, cols, rng);
                std::set<std::vector<Residue>> ker;
                for (const auto& v : all) {
                    bool zero = true;
                    for (std::size_t j = 0; j < cols && zero; ++j) {
                        Residue s = 0;
                        for (std::size_t i = 0; i < cols; ++i)
                            s = k.add(s, k.mul(v[i], sq(i, j)));
                        zero = s == 0;
                    }
                    if (zero)
                        ker.insert(v);
                }
                CHECK(oracle::enumerate_span(kernel_basis(sq)) == ker);
            }
        }
    }
}

TEST_CASE("property: canonical under unimodular row operations") {
    std::mt19937_64 rng(5);
    ResidueRing k(3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = oracle::random_matrix(k, 4, 5, rng);
        // U = product of elementary operations: unit scalings, row additions, swaps
        ZmodMatrix u = ZmodMatrix::identity(k, 4);
        for (int step = 0; step < 8; ++step) {
            ZmodMatrix e = ZmodMatrix::identity(k, 4);
            std::size_t i = rng() % 4, j = rng() % 4;
            if (i == j)
                e.set(i, i, 1 + 3 * (rng() % 9)); // unit
            else
                e.set(i, j, rng() % 27);
            u = e * u;
        }
        CHECK(howell(u * a) == howell(a));
        // rows from two spanning sets agree with mutual containment
        auto b = oracle::random_matrix(k, 3, 5, rng);
        bool mutual = true;
        for (std::size_t i = 0; i < b.rows(); ++i)
            mutual = mutual && span_contains(a, b.row(i));
        for (std::size_t i = 0; i < a.rows(); ++i)
            mutual = mutual && span_contains(b, a.row(i));
        CHECK(span_eq(a, b) == mutual);
    }
}

TEST_CASE("property: kernel rows annihilate") {
    std::mt19937_64 rng(9);
    ResidueRing k(5, 2);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = oracle::random_matrix(k, 5, 3, rng);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (rng() % 2)
                    m.set(i, j, 5 * (rng() % 5));
        auto ker = kernel_basis(m);
        auto prod = ker * m;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t j = 0; j < prod.cols(); ++j)
                CHECK(prod(i, j) == 0);
        CHECK(howell(ker).matrix() == ker);
    }
}
