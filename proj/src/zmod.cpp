#include "fforge/zmod.hpp"

#include <algorithm>
#include <limits>

namespace fforge {

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

ResidueRing::ResidueRing(std::int64_t p, int M) : p_(p), M_(M), modulus_(1) {
    if (!is_prime(p))
        throw std::invalid_argument("ResidueRing: " + std::to_string(p) + " is not prime");
    if (M < 1)
        throw std::invalid_argument("ResidueRing: exponent must be >= 1");
    for (int i = 0; i < M; ++i) {
        if (modulus_ > (std::numeric_limits<std::int32_t>::max() / p))
            throw std::invalid_argument("ResidueRing: p^M must be below 2^31");
        modulus_ *= p;
    }
}

int ResidueRing::valuation(Residue a) const {
    a = reduce(a);
    if (a == 0)
        return M_;
    int v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

Residue ResidueRing::prime_power(int e) const {
    if (e >= M_)
        return 0;
    Residue r = 1;
    for (int i = 0; i < e; ++i)
        r *= p_;
    return r;
}

Residue ResidueRing::inverse(Residue a) const {
    a = reduce(a);
    if (!is_unit(a))
        throw std::domain_error("ResidueRing: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(modulus_));
    // extended Euclid on (a, modulus)
    std::int64_t r0 = modulus_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return reduce(s0);
}

std::string ResidueRing::to_string() const {
    return "Z/" + std::to_string(p_) + "^" + std::to_string(M_);
}

ZmodMatrix::ZmodMatrix(ResidueRing ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

ZmodMatrix::ZmodMatrix(ResidueRing ring, std::size_t cols,
                       const std::vector<std::vector<std::int64_t>>& rows)
    : ring_(ring), rows_(0), cols_(cols) {
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("ZmodMatrix: ragged row");
        append_row(r);
    }
}

ZmodMatrix ZmodMatrix::identity(ResidueRing ring, std::size_t n) {
    ZmodMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void ZmodMatrix::append_row(std::span<const Residue> r) {
    if (r.size() != cols_)
        throw std::invalid_argument("ZmodMatrix: row length mismatch");
    for (Residue x : r)
        data_.push_back(ring_.reduce(x));
    ++rows_;
}

ZmodMatrix ZmodMatrix::operator*(const ZmodMatrix& o) const {
    if (!(ring_ == o.ring_) || cols_ != o.rows_)
        throw std::invalid_argument("ZmodMatrix: incompatible product");
    ZmodMatrix out(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Residue a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.data_[i * o.cols_ + j] = ring_.add(out.data_[i * o.cols_ + j], ring_.mul(a, o(k, j)));
        }
    return out;
}

std::vector<std::vector<Residue>> ZmodMatrix::to_rows() const {
    std::vector<std::vector<Residue>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.emplace_back(row(i).begin(), row(i).end());
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// w -= q * r over columns [from, end)
void axpy_sub(const ResidueRing& ring, std::vector<Residue>& w, std::span<const Residue> r, Residue q,
              std::size_t from) {
    if (q == 0)
        return;
    for (std::size_t j = from; j < w.size(); ++j)
        if (r[j] != 0)
            w[j] = ring.sub(w[j], ring.mul(q, r[j]));
}

} // namespace

HowellBuilder::HowellBuilder(ResidueRing ring, std::size_t cols)
    : ring_(ring), cols_(cols), row_at_col_(cols, -1) {}

void HowellBuilder::normalize(std::vector<Residue>& w, std::size_t c) const {
    int e = ring_.valuation(w[c]);
    Residue unit = w[c] / ring_.prime_power(e);
    if (unit == 1)
        return;
    Residue inv = ring_.inverse(unit);
    for (std::size_t j = c; j < cols_; ++j)
        if (w[j] != 0)
            w[j] = ring_.mul(w[j], inv);
}

bool HowellBuilder::reduce(std::vector<Residue>& w) const {
    std::size_t c = 0;
    for (;;) {
        while (c < cols_ && w[c] == 0)
            ++c;
        if (c == cols_)
            return true;
        long idx = row_at_col_[c];
        if (idx < 0)
            return false;
        Residue pp = ring_.prime_power(pivot_exp_[idx]);
        if (w[c] % pp != 0)
            return false;
        axpy_sub(ring_, w, rows_[idx], w[c] / pp, c);
        ++c;
    }
}

bool HowellBuilder::contains(std::span<const Residue> v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("HowellBuilder: vector length mismatch");
    std::vector<Residue> w(v.begin(), v.end());
    for (auto& x : w)
        x = ring_.reduce(x);
    return reduce(w);
}

bool HowellBuilder::add(std::span<const Residue> v) {
    if (v.size() != cols_)
        throw std::invalid_argument("HowellBuilder: vector length mismatch");
    bool grew = false;
    std::vector<std::vector<Residue>> pending;
    pending.emplace_back(v.begin(), v.end());
    for (auto& x : pending.back())
        x = ring_.reduce(x);

    auto push_annihilated = [&](const std::vector<Residue>& row, int e) {
        if (e == 0)
            return;
        Residue f = ring_.prime_power(ring_.exponent() - e);
        std::vector<Residue> a(row.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < row.size(); ++j) {
            a[j] = ring_.mul(row[j], f);
            nonzero = nonzero || a[j] != 0;
        }
        if (nonzero)
            pending.push_back(std::move(a));
    };

    while (!pending.empty()) {
        std::vector<Residue> w = std::move(pending.back());
        pending.pop_back();
        std::size_t c = 0;
        for (;;) {
            while (c < cols_ && w[c] == 0)
                ++c;
            if (c == cols_)
                break;
            int ew = ring_.valuation(w[c]);
            long idx = row_at_col_[c];
            if (idx >= 0 && ew >= pivot_exp_[idx]) {
                axpy_sub(ring_, w, rows_[idx], w[c] / ring_.prime_power(pivot_exp_[idx]), c);
                ++c;
                continue;
            }
            normalize(w, c);
            grew = true;
            if (idx >= 0) {
                // the new vector has the smaller pivot: it takes the slot and
                // the displaced row is reduced again
                std::swap(rows_[idx], w);
                pivot_exp_[idx] = ew;
                push_annihilated(rows_[idx], ew);
                pending.push_back(std::move(w));
            } else {
                row_at_col_[c] = static_cast<long>(rows_.size());
                rows_.push_back(std::move(w));
                pivot_exp_.push_back(ew);
                push_annihilated(rows_.back(), ew);
            }
            break;
        }
    }
    return grew;
}

HowellForm HowellBuilder::finish() const {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (row_at_col_[c] >= 0)
            cols.push_back(c);
    std::vector<std::vector<Residue>> out;
    out.reserve(cols.size());
    for (std::size_t c : cols)
        out.push_back(rows_[row_at_col_[c]]);
    // reduce entries above each pivot into [0, p^e)
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::size_t c = cols[i];
        Residue pp = ring_.prime_power(pivot_exp_[row_at_col_[c]]);
        for (std::size_t j = 0; j < i; ++j) {
            Residue q = out[j][c] / pp;
            axpy_sub(ring_, out[j], out[i], q, c);
        }
    }
    ZmodMatrix m(ring_, cols_, out);
    return HowellForm(std::move(m));
}

std::size_t HowellForm::pivot_column(std::size_t i) const {
    auto r = m_.row(i);
    for (std::size_t c = 0; c < r.size(); ++c)
        if (r[c] != 0)
            return c;
    throw std::logic_error("HowellForm: zero row");
}

bool HowellForm::contains(std::span<const Residue> v) const {
    if (v.size() != m_.cols())
        throw std::invalid_argument("HowellForm: vector length mismatch");
    const ResidueRing& ring = m_.ring();
    std::vector<Residue> w(v.begin(), v.end());
    for (auto& x : w)
        x = ring.reduce(x);
    std::size_t c = 0;
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        std::size_t pc = pivot_column(i);
        for (; c < pc; ++c)
            if (w[c] != 0)
                return false;
        Residue pivot = m_(i, pc);
        if (w[pc] % pivot != 0)
            return false;
        axpy_sub(ring, w, m_.row(i), w[pc] / pivot, pc);
        c = pc + 1;
    }
    for (; c < w.size(); ++c)
        if (w[c] != 0)
            return false;
    return true;
}

std::int64_t HowellForm::log_size() const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        total += ring().exponent() - ring().valuation(m_(i, pivot_column(i)));
    return total;
}

HowellForm howell(const ZmodMatrix& m) {
    HowellBuilder b(m.ring(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        b.add(m.row(i));
    return b.finish();
}

bool span_eq(const ZmodMatrix& a, const ZmodMatrix& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("span_eq: ring mismatch");
    if (a.cols() != b.cols())
        throw std::invalid_argument("span_eq: column count mismatch");
    return howell(a) == howell(b);
}

bool span_contains(const ZmodMatrix& a, std::span<const Residue> v) {
    if (v.size() != a.cols())
        throw std::invalid_argument("span_contains: vector length mismatch");
    return howell(a).contains(v);
}

ZmodMatrix kernel_basis(const ZmodMatrix& m) {
    const std::size_t n = m.rows(), k = m.cols();
    HowellBuilder b(m.ring(), k + n);
    std::vector<Residue> aug(k + n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(aug.begin(), aug.end(), 0);
        std::copy(m.row(i).begin(), m.row(i).end(), aug.begin());
        aug[k + i] = 1;
        b.add(aug);
    }
    HowellForm h = b.finish();
    HowellBuilder kb(m.ring(), n);
    for (std::size_t i = 0; i < h.rank(); ++i)
        if (h.pivot_column(i) >= k)
            kb.add(h.matrix().row(i).subspan(k));
    return kb.finish().matrix();
}

} // namespace fforge
