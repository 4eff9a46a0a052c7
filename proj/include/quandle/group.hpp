#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <string>
#include <vector>

namespace quandle {

/// A permutation of {0, ..., n-1}, stored as its image list.
using Permutation = std::vector<int>;

Permutation identity_permutation(int degree);
/// Apply `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);
Permutation inverse(const Permutation& p);

/// A finite group given by its multiplication table.
///
/// Products are read left to right: `mul(a, b)` is "a, then b" when the
/// elements are permutations. Construction validates associativity,
/// identity and inverses.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::vector<int>> mul, std::vector<int> inv, int id,
        std::string label = {});

    static FiniteGroup cyclic(int n);
    /// S_n with elements in lexicographic order of their image lists.
    static FiniteGroup symmetric(int n);
    /// The permutation group generated by `generators`, elements sorted
    /// lexicographically.
    static FiniteGroup from_permutations(std::span<const Permutation> generators, std::string label = {});

    int order() const noexcept { return order_; }
    int identity() const noexcept { return id_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& label() const noexcept { return label_; }

    /// Permutation images of the elements, when built from permutations.
    const std::vector<Permutation>& permutations() const noexcept { return perms_; }
    std::optional<int> index_of(const Permutation& p) const;

    std::vector<std::vector<int>> table() const;
    const std::vector<int>& inverses() const noexcept { return inv_; }

    /// Sorted element set of the subgroup generated by `gens`.
    std::vector<int> subgroup(std::span<const int> gens) const;
    bool is_subgroup(std::span<const int> elements) const;
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
    int element_order(int a) const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    int id_ = 0;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<Permutation> perms_;
    std::string label_;
};

/// Checks that `phi` (indexed by elements of `source`) is a group
/// homomorphism into `target`; returns the first failing pair (x, y) in
/// row-major order.
std::optional<std::pair<int, int>> find_homomorphism_failure(const FiniteGroup& source, const FiniteGroup& target,
    std::span<const int> phi);

/// A permutation group given by generators, with its element set closed
/// eagerly by breadth-first products.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    /// All elements, sorted lexicographically; the identity is always present.
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(const Permutation& p) const;
    /// Orbits of the natural action, each sorted, ordered by least element.
    std::vector<std::vector<int>> orbits() const;

private:
    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

} // namespace quandle
