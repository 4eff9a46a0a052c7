#pragma once

#include "quandle/errors.hpp"
#include "quandle/group.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quandle {

using Table = std::vector<std::vector<int>>;

/// A finite quandle given by its Cayley table, `op(x, y) = x * y`.
///
/// Instances only exist for tables that satisfy all three axioms; the
/// column inverse (the dual operation) is precomputed.
class FiniteQuandle {
public:
    /// Validates `table` and builds the quandle. Throws InvalidTable for a
    /// malformed table and AxiomViolation for the first axiom failure.
    static FiniteQuandle validate(const Table& table, std::string label = {});

    int order() const noexcept { return order_; }
    int op(int x, int y) const { return table_[index(x, y)]; }
    /// The unique z with z * y = x.
    int dual(int x, int y) const { return dual_[index(x, y)]; }
    /// Applies * y (sign > 0) or *^-1 y (sign < 0).
    int act(int x, int y, int sign) const { return sign > 0 ? op(x, y) : dual(x, y); }

    const std::string& label() const noexcept { return label_; }
    FiniteQuandle with_label(std::string label) const;

    Table table() const;
    const std::vector<int>& flat_table() const noexcept { return table_; }
    /// The right translation S_y : x -> x * y.
    Permutation column(int y) const;

    friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b)
    {
        return a.order_ == b.order_ && a.table_ == b.table_;
    }

private:
    FiniteQuandle() = default;
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * order_ + y; }

    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> dual_;
    std::string label_;
};

/// First axiom failure in row-major scan order, checking idempotency, then
/// right-bijectivity, then distributivity. Throws InvalidTable for a table
/// that is not square or has entries out of range.
std::optional<AxiomViolation> find_axiom_violation(const Table& table);

FiniteQuandle trivial(int n);
/// i * j = 2j - i mod n.
FiniteQuandle dihedral(int n);
/// a * b = b^-1 a b.
FiniteQuandle conj(const FiniteGroup& g);

/// One (H_i, z_i) pair of a coset construction. `subgroup` lists element
/// indices of H_i; order does not matter.
struct CosetPart {
    std::vector<int> subgroup;
    int z = 0;
};

/// A disjoint union of coset quandles together with the bookkeeping that
/// maps quandle elements back to (part, coset).
struct CosetQuandle {
    FiniteQuandle quandle;
    /// Part index of each quandle element.
    std::vector<int> part;
    /// Minimal group element of each coset.
    std::vector<int> representative;
    /// element_of[i][g] is the quandle element holding the coset H_i g.
    std::vector<std::vector<int>> element_of;
};

/// Right cosets Hx with Hx * Hy = H z^-1 x y^-1 z y.
CosetQuandle coset_quandle(const FiniteGroup& g, const CosetPart& part);
/// Tagged union of coset spaces with H_i x * H_j y = H_i z_i^-1 x y^-1 z_j y.
/// Elements are ordered by part, then by coset representative.
CosetQuandle disjoint_union_coset(const FiniteGroup& g, std::span<const CosetPart> parts);

/// Inn(Q), generated by the right translations S_y.
PermutationGroup inner_group(const FiniteQuandle& q);

inline int dual_op(const FiniteQuandle& q, int x, int y) { return q.dual(x, y); }

/// A relabeling p with p(x * y) = p(x) * p(y), mapping `a` onto `b`.
std::optional<Permutation> is_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);
bool is_automorphism(const FiniteQuandle& q, const Permutation& p);

/// Lexicographically least table over all relabelings.
FiniteQuandle canonical_form(const FiniteQuandle& q);
/// Order by size, then by row-major table.
bool canonical_less(const FiniteQuandle& a, const FiniteQuandle& b);

struct EnumerateOptions {
    int bound = 6;
    int jobs = 1;
};

/// All quandles of order n, either every labeled table (sorted by table) or
/// one canonical representative per isomorphism class (sorted by canonical
/// table). Throws BoundExceeded when n exceeds `options.bound`.
std::vector<FiniteQuandle> enumerate_quandles(int n, bool up_to_iso, const EnumerateOptions& options = {});

/// Canonical representatives of every order in [1, max_order], sorted by
/// order, then canonical table.
std::vector<FiniteQuandle> quandle_catalog(int max_order, const EnumerateOptions& options = {});

} // namespace quandle
