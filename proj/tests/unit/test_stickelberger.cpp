#include "doctest.h"

#include "fforge/stickelberger.hpp"

#include <numeric>

using namespace fforge;

namespace {

Rational coeff(const StickelbergerElement& t, int a) { return t.value[t.units.sigma(a)]; }

int euler_phi(int m) {
    int c = 0;
    for (int a = 1; a <= m; ++a)
        c += std::gcd(a, m) == 1;
    return c;
}

const std::vector<int> kConductors{3, 4, 5, 7, 8, 9, 11, 12, 15};

} // namespace

TEST_CASE("cyclotomic polynomials and arithmetic") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(18) == std::vector<std::int64_t>{1, 0, 0, -1, 0, 0, 1});
    for (int e : {1, 2, 3, 4, 6, 8, 12, 18}) {
        CAPTURE(e);
        CHECK(CyclotomicNumber::root_power(e, e) == CyclotomicNumber::rational(e, 1));
        CHECK(CyclotomicNumber::root_power(e, 2) * CyclotomicNumber::root_power(e, e - 1) ==
              CyclotomicNumber::root_power(e, 1));
        // the sum of all e-th roots of unity vanishes for e > 1
        CyclotomicNumber s(e);
        for (int k = 0; k < e; ++k)
            s += CyclotomicNumber::root_power(e, k);
        CHECK(s == CyclotomicNumber::rational(e, e == 1 ? 1 : 0));
    }
    // Ramanujan sum: primitive 12th roots add up to mu(12) = 0, primitive 6th roots to 1
    CyclotomicNumber r6(6);
    for (int k : {1, 5})
        r6 += CyclotomicNumber::root_power(6, k);
    CHECK(r6 == CyclotomicNumber::rational(6, 1));
}

TEST_CASE("unit group labeling") {
    for (int m = 1; m <= 64; ++m) {
        CAPTURE(m);
        auto u = unit_group(m);
        CHECK(u.group.order() == euler_phi(m));
        for (int a = 0; a < m && m > 1; ++a) {
            if (std::gcd(a, m) != 1)
                continue;
            for (int b = 1; b < m; ++b)
                if (std::gcd(b, m) == 1) {
                    CHECK(u.sigma(static_cast<std::int64_t>(a) * b) == u.group.op(u.sigma(a), u.sigma(b)));
                }
        }
    }
    CHECK(unit_group(16).group.cyclic_orders() == std::vector<int>{2, 4});
    CHECK(unit_group(15).group.cyclic_orders() == std::vector<int>{2, 4});
    CHECK_THROWS(unit_group(9).sigma(3));
    CHECK(is_valid_conductor(3));
    CHECK_FALSE(is_valid_conductor(6));
    CHECK_FALSE(is_valid_conductor(2));
}

TEST_CASE("theta_min examples") {
    auto t3 = theta_min(3);
    CHECK(coeff(t3, 1) == Rational(1, 6));
    CHECK(coeff(t3, 2) == Rational(-1, 6));
    CHECK(t3.S == std::set<std::int64_t>{3});
    auto t4 = theta_min(4);
    CHECK(coeff(t4, 1) == Rational(1, 4));
    CHECK(coeff(t4, 3) == Rational(-1, 4));
    for (int m : kConductors) {
        auto t = theta_min(m);
        CHECK(t.value.augmentation() == 0);
        CHECK(minus_pure(t));
    }
    CHECK_THROWS(theta_min(2));
    CHECK_THROWS(theta_min(6));
    CHECK_THROWS(theta_min(1));
}

TEST_CASE("depletion and smoothing") {
    auto t3 = theta_min(3);
    auto d2 = deplete(t3, 2);
    CHECK(coeff(d2, 1) == Rational(1, 3));
    CHECK(coeff(d2, 2) == Rational(-1, 3));
    CHECK(d2.S == std::set<std::int64_t>{2, 3});
    CHECK(deplete(t3, 7).value.is_zero());  // sigma_7 = 1

    auto t5 = theta_min(5);
    CHECK(deplete(deplete(t5, 2), 3).value == deplete(deplete(t5, 3), 2).value);
    CHECK(smooth_T(deplete(t5, 2), {3, 7}).value == deplete(smooth_T(t5, {7, 3}), 2).value);

    auto s7 = smooth_T(t3, {7});
    CHECK(coeff(s7, 1) == -1);
    CHECK(coeff(s7, 2) == 1);
    auto s2 = smooth_T(t3, {2});
    CHECK(coeff(s2, 1) == Rational(1, 2));
    CHECK(coeff(s2, 2) == Rational(-1, 2));
    CHECK(smooth_T(t3, {}).value == t3.value);

    CHECK_THROWS(deplete(t3, 3));
    CHECK_THROWS(deplete(t3, 4));
    CHECK_THROWS(deplete(s7, 7));
    CHECK_THROWS(smooth_T(d2, {2}));
    CHECK_THROWS(smooth_T(t3, {3}));
}

TEST_CASE("integrality") {
    auto t3 = theta_min(3);
    CHECK(integrality_check(smooth_T(t3, {7}), 3));
    CHECK(integrality_check(smooth_T(t3, {2}), 3));
    CHECK_THROWS(integrality_check(t3, 3));
    CHECK_THROWS(integrality_check(smooth_T(t3, {7}), 2));
    CHECK_THROWS(integrality_check(smooth_T(t3, {7}), 9));

    // T-smoothing with an odd prime clears every denominator
    for (int m : kConductors) {
        std::int64_t ell = 3;
        while (m % ell == 0)
            ell += 2;
        auto s = smooth_T(theta_min(m), {ell});
        for (std::int64_t p : {3, 5, 7, 11, 13})
            CHECK(integrality_check(s, p));
        for (const auto& c : s.value.coefficients())
            CHECK(boost::multiprecision::denominator(c) == 1);
    }
    // without smoothing the denominator 2m survives: the check is not vacuous
    auto bad = theta_min(9);
    bad.T.insert(1);  // bypasses the contract to expose the raw denominators
    CHECK_FALSE(integrality_check(bad, 3));
}

TEST_CASE("character side") {
    // imaginary quadratic L(0, chi_-d) = 2 h / w
    struct Case {
        int m;
        Rational expected;
    };
    for (auto c : {Case{3, Rational(1, 3)}, Case{4, Rational(1, 2)}, Case{7, 1}, Case{8, 1}, Case{11, 1}, Case{15, 2}}) {
        CAPTURE(c.m);
        auto u = unit_group(c.m);
        int found = 0;
        for (const auto& chi : bernoulli_oracle(c.m)) {
            if (chi.conductor != c.m || !chi.value.is_rational())
                continue;
            auto zeta_at = [&](int a) {
                auto r = u.group.residues_of(u.sigma(a));
                int e = chi.value.level();
                std::int64_t s = 0;
                for (std::size_t i = 0; i < r.size(); ++i)
                    s += static_cast<std::int64_t>(chi.exponents[i]) * r[i] * (e / u.group.cyclic_orders()[i]);
                return s % e;
            };
            int e = chi.value.level();
            bool quadratic = true;
            for (int a : u.labels)
                quadratic = quadratic && (2 * zeta_at(a)) % e == 0;
            bool odd = zeta_at(c.m - 1) != 0;
            if (quadratic && odd) {
                CHECK(chi.value.rational_part() == c.expected);
                ++found;
            }
        }
        CHECK(found == 1);
    }
    // trivial character carries the Euler factor at every l | m
    for (int m : kConductors)
        CHECK(bernoulli_oracle(m).front().value == CyclotomicNumber::rational(bernoulli_oracle(m).front().value.level(), 0));
}

TEST_CASE("dual-path equality") {
    for (int m : kConductors) {
        CAPTURE(m);
        CHECK(theta_from_characters(m) == theta_min(m).value);
    }
    CHECK(theta_from_characters(16) == theta_min(16).value);
    CHECK(theta_from_characters(21) == theta_min(21).value);
}

TEST_CASE("restriction") {
    std::set<std::int64_t> S3{3}, T7{7};
    auto t9 = smooth_T(theta_min(9), T7);
    auto r = restrict_theta(t9, 3);
    CHECK(r.value == smooth_T(theta_min(3), T7).value);

    auto t15 = theta_min(15);
    CHECK(restrict_theta(t15, 3).value == deplete(theta_min(3), 5).value);
    CHECK(restrict_theta(t15, 15).value == t15.value);
    CHECK(restrict_theta(t15, 5).value == deplete(theta_min(5), 3).value);

    struct Chain {
        std::vector<int> levels;
        std::set<std::int64_t> extra_S, T;
    };
    std::vector<Chain> chains{{{27, 9, 3}, {}, {}},       {{27, 9, 3}, {2}, {7}}, {{16, 8, 4}, {}, {3}},
                              {{16, 8, 4}, {5}, {3, 7}}, {{15, 3}, {}, {}},      {{15, 3}, {2}, {7}}};
    for (const auto& c : chains) {
        std::set<std::int64_t> S = c.extra_S;
        for (int ell : prime_factors(c.levels.front()))
            S.insert(ell);
        auto top = theta_direct(c.levels.front(), S, c.T);
        for (std::size_t i = 1; i < c.levels.size(); ++i) {
            CAPTURE(c.levels[i]);
            CHECK(restriction_compatible(top, c.levels[i]));
            // stepwise restriction agrees with the direct jump
            auto step = restrict_theta(restrict_theta(top, c.levels[i - 1]), c.levels[i]);
            CHECK(step.value == restrict_theta(top, c.levels[i]).value);
        }
    }
    CHECK_THROWS(restrict_theta(t15, 9));
    CHECK_THROWS(restrict_theta(t15, 6));
}
