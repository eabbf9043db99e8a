#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fforge {

/// Finite abelian group Z/d_1 x ... x Z/d_k.
///
/// Elements are addressed by an index in [0, order). The enumeration is
/// mixed-radix lexicographic in the residue tuple (a_1, ..., a_k): a_1 is the
/// most significant digit, so index 0 is the identity and the first factor
/// varies slowest. An empty list of orders gives the trivial group.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup();
    explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

    const std::vector<int>& cyclic_orders() const { return impl_->orders; }
    std::size_t factor_count() const { return impl_->orders.size(); }
    int order() const { return impl_->order; }

    int index_of(std::span<const int> residues) const;
    std::vector<int> residues_of(int index) const;

    int identity() const { return 0; }
    int op(int a, int b) const { return impl_->table[static_cast<std::size_t>(a) * impl_->order + b]; }
    int inverse(int a) const { return impl_->inv[a]; }
    int power(int a, std::int64_t k) const;
    int element_order(int a) const;
    /// Index of the i-th standard generator (1 in factor i, 0 elsewhere).
    int generator(std::size_t i) const;

    /// Sorted indices of the subgroup generated by gens.
    std::vector<int> subgroup(std::span<const int> gens) const;

    bool operator==(const FiniteAbelianGroup& o) const {
        return impl_ == o.impl_ || impl_->orders == o.impl_->orders;
    }

    std::string to_string() const;

private:
    struct Impl {
        std::vector<int> orders;
        int order = 1;
        std::vector<int> table;
        std::vector<int> inv;
    };
    std::shared_ptr<const Impl> impl_;
};

/// A group element paired with its group.
class GroupElement {
public:
    GroupElement(FiniteAbelianGroup g, std::span<const int> residues);
    GroupElement(FiniteAbelianGroup g, int index);

    const FiniteAbelianGroup& group() const { return group_; }
    int index() const { return index_; }
    std::vector<int> residues() const { return group_.residues_of(index_); }
    int order() const { return group_.element_order(index_); }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const { return {group_, group_.inverse(index_)}; }
    GroupElement pow(std::int64_t k) const { return {group_, group_.power(index_, k)}; }
    bool operator==(const GroupElement& o) const { return group_ == o.group_ && index_ == o.index_; }

private:
    FiniteAbelianGroup group_;
    int index_;
};

/// Homomorphism given by the images of the standard generators of the source.
class GroupHom {
public:
    GroupHom(FiniteAbelianGroup source, FiniteAbelianGroup target, std::vector<int> generator_images);

    /// The map (a_1, ..., a_k) -> (a_{i_1} mod e_1, ...) reducing selected
    /// factors of the source onto the factors of the target; target factor t
    /// must have order dividing source factor factor_map[t]. Other source
    /// factors are sent to the identity.
    static GroupHom reduction(FiniteAbelianGroup source, FiniteAbelianGroup target,
                              std::vector<std::size_t> factor_map);

    const FiniteAbelianGroup& source() const { return source_; }
    const FiniteAbelianGroup& target() const { return target_; }
    int operator()(int index) const { return table_[index]; }

    bool is_surjective() const;
    /// Order of the kernel.
    int kernel_order() const;

private:
    FiniteAbelianGroup source_;
    FiniteAbelianGroup target_;
    std::vector<int> table_;
};

/// p-rank style helpers on subgroups (given as sorted index lists).
int ell_rank(const FiniteAbelianGroup& g, std::span<const int> subgroup, int ell);
/// Minimal number of generators of a finite abelian subgroup.
int minimal_generator_count(const FiniteAbelianGroup& g, std::span<const int> subgroup);
/// All subgroups of the subgroup `ambient`, each as a sorted index list.
std::vector<std::vector<int>> all_subgroups(const FiniteAbelianGroup& g, std::span<const int> ambient);
std::vector<int> prime_factors(std::int64_t n);

} // namespace fforge
