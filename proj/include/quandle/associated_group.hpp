#pragma once

#include "quandle/presentation.hpp"

#include <string>
#include <vector>

namespace quandle {

/// <e_x, x in X | R-bar>; generator e_x carries the quandle generator's name.
struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Each relation u = v becomes the relator eta(u) eta(v)^-1.
GroupPresentation associated_group(const QuandlePresentation& p);

/// Generators and relators sorted, for structural comparison.
GroupPresentation canonical(const GroupPresentation& g);

/// Checks As(P1 * P2) against As(P1) * As(P2) after renaming P2 apart the
/// way free_product does.
bool as_free_product_check(const QuandlePresentation& left, const QuandlePresentation& right);

/// Right action x . w of a group word whose letters name elements of `q`
/// ("0", "1", ...): e_y applies S_y, e_y^-1 its inverse.
int act(const FiniteQuandle& q, int x, const GroupWord& w);

/// The image of psi : As(Q) -> Inn(Q), generated by the S_x.
PermutationGroup psi_image(const FiniteQuandle& q);

/// Number of classes of generators after abelianizing e_{x*y} = e_x, which
/// identifies the heads of both sides of every relation.
int abelianization_rank(const QuandlePresentation& p);
/// Number of orbits of Inn(Q).
int abelianization_rank(const FiniteQuandle& q);

} // namespace quandle
