#include "fforge/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace fforge {

std::vector<std::int64_t> cyclotomic_polynomial(int e) {
    if (e < 1)
        throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    // x^e - 1 divided by Phi_d for every proper divisor d
    std::vector<std::int64_t> num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (int d = 1; d < e; ++d) {
        if (e % d)
            continue;
        auto den = cyclotomic_polynomial(d);
        std::size_t dn = den.size() - 1;
        std::vector<std::int64_t> q(num.size() - dn, 0);
        for (std::size_t i = num.size(); i-- > dn;) {
            std::int64_t lead = num[i];  // den is monic
            q[i - dn] = lead;
            for (std::size_t j = 0; j <= dn; ++j)
                num[i - dn + j] -= lead * den[j];
        }
        num = std::move(q);
    }
    return num;
}

std::shared_ptr<const CyclotomicNumber::Context> CyclotomicNumber::context(int e) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const Context>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it != cache.end())
        return it->second;
    auto phi = cyclotomic_polynomial(e);
    auto ctx = std::make_shared<Context>();
    ctx->e = e;
    ctx->degree = static_cast<int>(phi.size()) - 1;
    std::vector<std::int64_t> cur(ctx->degree, 0);
    cur[0] = 1;
    for (int k = 0; k < e; ++k) {
        ctx->powers.push_back(cur);
        // multiply by zeta and reduce with the monic relation
        std::int64_t top = cur.back();
        for (int i = ctx->degree - 1; i > 0; --i)
            cur[i] = cur[i - 1];
        cur[0] = 0;
        for (int i = 0; i < ctx->degree; ++i)
            cur[i] -= top * phi[i];
    }
    cache.emplace(e, ctx);
    return ctx;
}

CyclotomicNumber::CyclotomicNumber(int e) : ctx_(context(e)), c_(ctx_->degree, Rational(0)) {}

CyclotomicNumber CyclotomicNumber::rational(int e, const Rational& q) {
    CyclotomicNumber x(e);
    x.c_[0] = q;
    return x;
}

CyclotomicNumber CyclotomicNumber::root_power(int e, std::int64_t k) {
    CyclotomicNumber x(e);
    k %= e;
    if (k < 0)
        k += e;
    const auto& row = x.ctx_->powers[k];
    for (std::size_t i = 0; i < row.size(); ++i)
        x.c_[i] = row[i];
    return x;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

void CyclotomicNumber::check(const CyclotomicNumber& o) const {
    if (ctx_->e != o.ctx_->e)
        throw std::invalid_argument("cyclotomic: mismatched root orders");
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check(b);
    CyclotomicNumber r(a.ctx_->e);
    const int e = a.ctx_->e;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0)
                continue;
            Rational prod = a.c_[i] * b.c_[j];
            const auto& row = a.ctx_->powers[(i + j) % e];
            for (std::size_t t = 0; t < row.size(); ++t)
                if (row[t])
                    r.c_[t] += prod * row[t];
        }
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& q) const {
    CyclotomicNumber r = *this;
    for (auto& x : r.c_)
        x *= q;
    return r;
}

} // namespace fforge
