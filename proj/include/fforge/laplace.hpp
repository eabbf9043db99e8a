#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace fforge {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// k x k minors of a rows x cols matrix over a commutative ring, by Laplace
/// expansion along the rows. Memo tables are keyed by the set of remaining
/// columns, so sub-determinants are shared between column subsets.
/// Order: row subsets outer, column subsets inner, both lexicographic.
template <class T, class Get>
std::vector<T> laplace_minors(std::size_t rows, std::size_t cols, std::size_t k, Get get, const T& zero, const T& one) {
    if (k > std::min(rows, cols))
        throw std::invalid_argument("minors: k out of range");
    if (cols > 63)
        throw std::invalid_argument("minors: too many columns");
    if (k == 0)
        return {one};
    std::vector<T> out;
    auto col_sets = combinations(cols, k);
    for (const auto& rs : combinations(rows, k)) {
        std::vector<std::unordered_map<std::uint64_t, T>> memo(k + 1);
        auto det = [&](auto&& self, std::uint64_t mask) -> const T& {
            std::size_t level = k - static_cast<std::size_t>(std::popcount(mask));
            auto& table = memo[level];
            if (auto it = table.find(mask); it != table.end())
                return it->second;
            T acc = mask == 0 ? one : zero;
            int pos = 0;
            for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1, ++pos) {
                std::size_t c = static_cast<std::size_t>(std::countr_zero(rest));
                const T& a = get(rs[level], c);
                if (a == zero)
                    continue;
                const T& sub = self(self, mask & ~(std::uint64_t{1} << c));
                if (sub == zero)
                    continue;
                if (pos % 2 == 0)
                    acc += a * sub;
                else
                    acc -= a * sub;
            }
            return table.emplace(mask, std::move(acc)).first->second;
        };
        for (const auto& cs : col_sets) {
            std::uint64_t mask = 0;
            for (std::size_t c : cs)
                mask |= std::uint64_t{1} << c;
            out.push_back(det(det, mask));
        }
    }
    return out;
}

} // namespace fforge
