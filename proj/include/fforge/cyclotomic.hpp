#pragma once

#include "fforge/group_ring.hpp"

#include <memory>
#include <vector>

namespace fforge {

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int e);

/// Element of Q(zeta_e), stored as a rational polynomial of degree < phi(e)
/// in zeta_e.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(int e);
    static CyclotomicNumber rational(int e, const Rational& q);
    /// zeta_e^k for any integer k.
    static CyclotomicNumber root_power(int e, std::int64_t k);

    int level() const { return ctx_->e; }
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_rational() const;
    Rational rational_part() const { return c_[0]; }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber scaled(const Rational& q) const;
    bool operator==(const CyclotomicNumber& o) const { return ctx_->e == o.ctx_->e && c_ == o.c_; }

private:
    struct Context {
        int e;
        int degree;
        // reduction of zeta^k, k in [0, e)
        std::vector<std::vector<std::int64_t>> powers;
    };
    static std::shared_ptr<const Context> context(int e);
    void check(const CyclotomicNumber& o) const;

    std::shared_ptr<const Context> ctx_;
    std::vector<Rational> c_;
};

} // namespace fforge
