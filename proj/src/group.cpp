#include "fforge/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fforge {

namespace {
constexpr int kMaxGroupOrder = 4096;
}

FiniteAbelianGroup::FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{}) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) {
    auto impl = std::make_shared<Impl>();
    impl->orders = std::move(cyclic_orders);
    std::int64_t n = 1;
    for (int d : impl->orders) {
        if (d < 2)
            throw std::invalid_argument("FiniteAbelianGroup: cyclic orders must be >= 2");
        n *= d;
        if (n > kMaxGroupOrder)
            throw std::invalid_argument("FiniteAbelianGroup: order exceeds " + std::to_string(kMaxGroupOrder));
    }
    impl->order = static_cast<int>(n);
    const std::size_t k = impl->orders.size();

    std::vector<std::vector<int>> res(n, std::vector<int>(k));
    for (int idx = 0; idx < n; ++idx) {
        int rem = idx;
        for (std::size_t i = k; i-- > 0;) {
            res[idx][i] = rem % impl->orders[i];
            rem /= impl->orders[i];
        }
    }
    auto encode = [&](const std::vector<int>& r) {
        int idx = 0;
        for (std::size_t i = 0; i < k; ++i)
            idx = idx * impl->orders[i] + r[i];
        return idx;
    };
    impl->table.resize(static_cast<std::size_t>(n) * n);
    impl->inv.resize(n);
    std::vector<int> tmp(k);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (std::size_t i = 0; i < k; ++i)
                tmp[i] = (res[a][i] + res[b][i]) % impl->orders[i];
            impl->table[static_cast<std::size_t>(a) * n + b] = encode(tmp);
        }
        for (std::size_t i = 0; i < k; ++i)
            tmp[i] = (impl->orders[i] - res[a][i]) % impl->orders[i];
        impl->inv[a] = encode(tmp);
    }
    impl_ = std::move(impl);
}

int FiniteAbelianGroup::index_of(std::span<const int> residues) const {
    const auto& d = impl_->orders;
    if (residues.size() != d.size())
        throw std::invalid_argument("FiniteAbelianGroup: residue tuple has wrong length");
    int idx = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        int r = ((residues[i] % d[i]) + d[i]) % d[i];
        idx = idx * d[i] + r;
    }
    return idx;
}

std::vector<int> FiniteAbelianGroup::residues_of(int index) const {
    const auto& d = impl_->orders;
    std::vector<int> r(d.size());
    for (std::size_t i = d.size(); i-- > 0;) {
        r[i] = index % d[i];
        index /= d[i];
    }
    return r;
}

int FiniteAbelianGroup::power(int a, std::int64_t k) const {
    int n = element_order(a);
    k %= n;
    if (k < 0)
        k += n;
    int out = 0;
    int base = a;
    while (k > 0) {
        if (k & 1)
            out = op(out, base);
        base = op(base, base);
        k >>= 1;
    }
    return out;
}

int FiniteAbelianGroup::element_order(int a) const {
    auto r = residues_of(a);
    std::int64_t l = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        int d = impl_->orders[i];
        int o = d / std::gcd(d, r[i]);
        l = std::lcm(l, static_cast<std::int64_t>(o));
    }
    return static_cast<int>(l);
}

int FiniteAbelianGroup::generator(std::size_t i) const {
    std::vector<int> r(factor_count(), 0);
    r.at(i) = 1;
    return index_of(r);
}

std::vector<int> FiniteAbelianGroup::subgroup(std::span<const int> gens) const {
    std::vector<char> seen(order(), 0);
    std::vector<int> out{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int g : gens) {
            int x = op(out[head], g);
            if (!seen[x]) {
                seen[x] = 1;
                out.push_back(x);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FiniteAbelianGroup::to_string() const {
    if (impl_->orders.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < impl_->orders.size(); ++i) {
        if (i)
            s += " x ";
        s += "Z/" + std::to_string(impl_->orders[i]);
    }
    return s;
}

GroupElement::GroupElement(FiniteAbelianGroup g, std::span<const int> residues)
    : group_(std::move(g)), index_(group_.index_of(residues)) {}

GroupElement::GroupElement(FiniteAbelianGroup g, int index) : group_(std::move(g)), index_(index) {
    if (index < 0 || index >= group_.order())
        throw std::out_of_range("GroupElement: index out of range");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
    if (!(group_ == o.group_))
        throw std::invalid_argument("GroupElement: group mismatch");
    return {group_, group_.op(index_, o.index_)};
}

GroupHom::GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<int> generator_images)
    : source_(std::move(source)), target_(std::move(target)) {
    const auto& d = source_.cyclic_orders();
    if (generator_images.size() != d.size())
        throw std::invalid_argument("GroupHom: need one image per source generator");
    for (std::size_t i = 0; i < d.size(); ++i) {
        int img = generator_images[i];
        if (img < 0 || img >= target_.order())
            throw std::invalid_argument("GroupHom: image out of range");
        if (d[i] % target_.element_order(img) != 0)
            throw std::invalid_argument("GroupHom: generator image order does not divide the source order");
    }
    table_.resize(source_.order());
    for (int idx = 0; idx < source_.order(); ++idx) {
        auto r = source_.residues_of(idx);
        int img = target_.identity();
        for (std::size_t i = 0; i < r.size(); ++i)
            img = target_.op(img, target_.power(generator_images[i], r[i]));
        table_[idx] = img;
    }
}

GroupHom GroupHom::reduction(FiniteAbelianGroup source, FiniteAbelianGroup target,
                             std::vector<std::size_t> factor_map) {
    if (factor_map.size() != target.factor_count())
        throw std::invalid_argument("GroupHom::reduction: one source factor per target factor");
    std::vector<int> images(source.factor_count(), target.identity());
    std::vector<bool> used(source.factor_count(), false);
    for (std::size_t t = 0; t < factor_map.size(); ++t) {
        std::size_t s = factor_map[t];
        if (s >= source.factor_count() || used[s])
            throw std::invalid_argument("GroupHom::reduction: bad factor map");
        used[s] = true;
        images[s] = target.generator(t);
    }
    return GroupHom(std::move(source), std::move(target), std::move(images));
}

bool GroupHom::is_surjective() const {
    std::vector<char> hit(target_.order(), 0);
    for (int x : table_)
        hit[x] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

int GroupHom::kernel_order() const {
    return static_cast<int>(std::count(table_.begin(), table_.end(), target_.identity()));
}

int ell_rank(const FiniteAbelianGroup& g, std::span<const int> subgroup, int ell) {
    // |H[ell]| = ell^rank
    int count = 0;
    for (int x : subgroup)
        if (g.power(x, ell) == g.identity())
            ++count;
    int rank = 0;
    while (count > 1) {
        count /= ell;
        ++rank;
    }
    return rank;
}

std::vector<int> prime_factors(std::int64_t n) {
    std::vector<int> out;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(static_cast<int>(d));
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(static_cast<int>(n));
    return out;
}

int minimal_generator_count(const FiniteAbelianGroup& g, std::span<const int> subgroup) {
    int best = 0;
    for (int ell : prime_factors(static_cast<std::int64_t>(subgroup.size())))
        best = std::max(best, ell_rank(g, subgroup, ell));
    return best;
}

std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup& g, std::span<const int> ambient) {
    std::set<std::vector<int>> found{{g.identity()}};
    std::vector<std::vector<int>> queue{{g.identity()}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> cur = queue[head];
        for (int x : ambient) {
            if (std::binary_search(cur.begin(), cur.end(), x))
                continue;
            std::vector<int> gens = cur;
            gens.push_back(x);
            auto h = g.subgroup(gens);
            if (found.insert(h).second)
                queue.push_back(std::move(h));
        }
    }
    return {found.begin(), found.end()};
}

} // namespace fforge
