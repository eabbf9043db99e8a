#include "fforge/stickelberger.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fforge {

namespace {

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t n) {
    std::int64_t r = 1 % n;
    b %= n;
    while (e > 0) {
        if (e & 1)
            r = r * b % n;
        b = b * b % n;
        e >>= 1;
    }
    return r;
}

int multiplicative_order(std::int64_t a, std::int64_t n) {
    std::int64_t x = a % n;
    int k = 1;
    while (x != 1 % n) {
        x = x * a % n;
        ++k;
    }
    return k;
}

// x = a mod q, x = 1 mod m / q
int crt_lift(int a, int q, int m) {
    int rest = m / q;
    for (int k = 0; k < q; ++k) {
        int x = 1 + rest * k;
        if (x % q == a % q)
            return x % m;
    }
    throw std::logic_error("crt_lift: moduli not coprime");
}

std::int64_t norm_mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

void require_conductor(int m, const char* who) {
    if (!is_valid_conductor(m))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(m) +
                                    " is not a conductor (need m > 2, m != 2 mod 4)");
}

void require_new_prime(const StickelbergerElement& theta, std::int64_t v, const char* who) {
    if (v < 2 || !is_prime(v))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(v) + " is not prime");
    if (theta.conductor() % v == 0 || theta.S.count(v))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(v) + " already lies in S");
    if (theta.T.count(v))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(v) + " already lies in T");
}

} // namespace

int UnitGroup::sigma(std::int64_t a) const {
    if (m == 1)
        return 0;
    int r = index_of.at(norm_mod(a, m));
    if (r < 0)
        throw std::invalid_argument("sigma: " + std::to_string(a) + " is not prime to " + std::to_string(m));
    return r;
}

bool is_valid_conductor(int m) { return m > 2 && m % 4 != 2; }

UnitGroup unit_group(int m) {
    if (m < 1)
        throw std::invalid_argument("unit_group: modulus must be positive");
    UnitGroup u;
    u.m = m;
    std::vector<int> orders;
    for (int ell : prime_factors(m)) {
        int q = 1, e = 0;
        while (m % (q * ell) == 0) {
            q *= ell;
            ++e;
        }
        if (ell == 2) {
            if (e >= 2) {
                orders.push_back(2);
                u.generators.push_back(crt_lift(q - 1, q, m));
            }
            if (e >= 3) {
                orders.push_back(q / 4);
                u.generators.push_back(crt_lift(5, q, m));
            }
            continue;
        }
        int phi = q / ell * (ell - 1);
        int g = 2;
        while (std::gcd(g, q) != 1 || multiplicative_order(g, q) != phi)
            ++g;
        orders.push_back(phi);
        u.generators.push_back(crt_lift(g, q, m));
    }
    u.group = FiniteAbelianGroup(orders);
    u.index_of.assign(m, -1);
    for (int i = 0; i < u.group.order(); ++i) {
        auto r = u.group.residues_of(i);
        std::int64_t a = 1 % m;
        for (std::size_t f = 0; f < r.size(); ++f)
            a = a * mod_pow(u.generators[f], r[f], m) % m;
        if (m == 1)
            a = 0;
        if (u.index_of[a] != -1)
            throw std::logic_error("unit_group: labeling is not injective");
        u.labels.push_back(static_cast<int>(a));
        u.index_of[a] = i;
    }
    return u;
}

StickelbergerElement theta_min(int m) {
    require_conductor(m, "theta_min");
    auto u = unit_group(m);
    auto value = RationalGroupRingElement::zero(u.group, RationalField{});
    for (int a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1)
            continue;
        value.set(u.group.inverse(u.sigma(a)), Rational(1, 2) - Rational(a, m));
    }
    std::set<std::int64_t> S;
    for (int ell : prime_factors(m))
        S.insert(ell);
    return StickelbergerElement{std::move(u), std::move(S), {}, std::move(value)};
}

StickelbergerElement deplete(const StickelbergerElement& theta, std::int64_t v) {
    require_new_prime(theta, v, "deplete");
    const auto& u = theta.units;
    auto factor = RationalGroupRingElement::one(u.group, RationalField{});
    factor -= RationalGroupRingElement::basis(u.group, RationalField{}, u.group.inverse(u.sigma(v)));
    StickelbergerElement out = theta;
    out.value = factor * theta.value;
    out.S.insert(v);
    return out;
}

StickelbergerElement smooth_T(const StickelbergerElement& theta, const std::set<std::int64_t>& T) {
    StickelbergerElement out = theta;
    const auto& u = theta.units;
    for (auto v : T) {
        require_new_prime(out, v, "smooth_T");
        auto factor = RationalGroupRingElement::one(u.group, RationalField{});
        factor.set(u.group.inverse(u.sigma(v)), factor[u.group.inverse(u.sigma(v))] - Rational(v));
        out.value = factor * out.value;
        out.T.insert(v);
    }
    return out;
}

StickelbergerElement theta_direct(int m, const std::set<std::int64_t>& S, const std::set<std::int64_t>& T) {
    auto theta = theta_min(m);
    for (auto ell : theta.S)
        if (!S.count(ell))
            throw std::invalid_argument("theta_direct: S must contain every prime dividing m");
    for (auto v : S)
        if (!theta.S.count(v))
            theta = deplete(theta, v);
    return smooth_T(theta, T);
}

bool minus_pure(const StickelbergerElement& theta) {
    const auto& u = theta.units;
    return (theta.value + theta.value.shifted(u.sigma(-1))).is_zero();
}

bool integrality_check(const StickelbergerElement& theta, std::int64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("integrality_check: p must be an odd prime");
    if (theta.T.empty())
        throw std::invalid_argument("integrality_check: the integrality statement needs a nonempty T");
    for (const auto& c : theta.value.coefficients())
        if (boost::multiprecision::denominator(c) % p == 0)
            return false;
    return minus_pure(theta);
}

std::vector<CharacterValue> bernoulli_oracle(int m) {
    require_conductor(m, "bernoulli_oracle");
    const auto u = unit_group(m);
    const auto& orders = u.group.cyclic_orders();
    int e = 1;
    for (int d : orders)
        e = std::lcm(e, d);
    auto exponent = [&](const std::vector<int>& chi, int index) {
        auto r = u.group.residues_of(index);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            s += static_cast<std::int64_t>(chi[i]) * r[i] * (e / orders[i]);
        return static_cast<int>(s % e);
    };

    std::vector<int> divisors;
    for (int f = 1; f <= m; ++f)
        if (m % f == 0)
            divisors.push_back(f);

    std::vector<CharacterValue> out;
    for (int idx = 0; idx < u.group.order(); ++idx) {
        // the character tuple is enumerated like a group element
        std::vector<int> chi = u.group.residues_of(idx);
        int f = m;
        for (int cand : divisors) {
            bool trivial_on_kernel = true;
            for (int a : u.labels)
                if (a % cand == 1 % cand && exponent(chi, u.sigma(a)) != 0) {
                    trivial_on_kernel = false;
                    break;
                }
            if (trivial_on_kernel) {
                f = cand;
                break;
            }
        }
        // chi_f(b) through any unit mod m congruent to b mod f
        std::vector<int> lift(f, -1);
        for (int a : u.labels)
            if (lift[a % f] < 0)
                lift[a % f] = a;
        auto chi_f = [&](std::int64_t b) { return CyclotomicNumber::root_power(e, exponent(chi, u.sigma(lift[b % f]))); };

        CyclotomicNumber value(e);
        if (f == 1) {
            value = CyclotomicNumber::rational(e, Rational(-1, 2));
        } else {
            for (int b = 1; b < f; ++b)
                if (std::gcd(b, f) == 1)
                    value += chi_f(b).scaled(Rational(b));
            value = value.scaled(Rational(-1, f));
        }
        for (int ell : prime_factors(m)) {
            if (f % ell == 0)
                continue;
            auto factor = CyclotomicNumber::rational(e, 1);
            factor -= f == 1 ? CyclotomicNumber::rational(e, 1) : chi_f(ell);
            value = value * factor;
        }
        out.push_back(CharacterValue{std::move(chi), f, std::move(value)});
    }
    return out;
}

RationalGroupRingElement theta_from_characters(int m) {
    const auto chars = bernoulli_oracle(m);
    const auto u = unit_group(m);
    const auto& orders = u.group.cyclic_orders();
    int e = chars.front().value.level();
    auto out = RationalGroupRingElement::zero(u.group, RationalField{});
    const Rational inv_order(1, u.group.order());
    for (int b = 0; b < u.group.order(); ++b) {
        auto r = u.group.residues_of(b);
        CyclotomicNumber sum(e);
        for (const auto& c : chars) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < r.size(); ++i)
                s += static_cast<std::int64_t>(c.exponents[i]) * r[i] * (e / orders[i]);
            sum += CyclotomicNumber::root_power(e, s) * c.value;
        }
        if (!sum.is_rational())
            throw std::logic_error("theta_from_characters: coefficient is not rational");
        out.set(b, sum.rational_part() * inv_order);
    }
    return out;
}

StickelbergerElement restrict_theta(const StickelbergerElement& theta, int m1) {
    const int m2 = theta.conductor();
    require_conductor(m1, "restrict_theta");
    if (m2 % m1 != 0)
        throw std::invalid_argument("restrict_theta: target conductor must divide the source conductor");
    for (int ell : prime_factors(m2))
        if (!theta.S.count(ell))
            throw std::invalid_argument("restrict_theta: S must contain every prime dividing the source conductor");
    auto target = unit_group(m1);
    std::vector<int> images;
    for (int g : theta.units.generators)
        images.push_back(target.sigma(g));
    GroupHom pi(theta.units.group, target.group, images);
    auto value = restrict_element(pi, theta.value);
    return StickelbergerElement{std::move(target), theta.S, theta.T, std::move(value)};
}

bool restriction_compatible(const StickelbergerElement& theta, int m1) {
    return restrict_theta(theta, m1).value == theta_direct(m1, theta.S, theta.T).value;
}

} // namespace fforge
