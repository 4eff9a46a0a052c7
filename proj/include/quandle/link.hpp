#pragma once

#include "quandle/associated_group.hpp"
#include "quandle/presentation.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quandle {

struct BraidLetter {
    /// Generator s_index, 1 <= index < strands.
    int index = 1;
    int sign = 1;

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    int strands = 1;
    std::vector<BraidLetter> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Tokens `s<k>` and `s<k>^-1`, whitespace separated. Without `strands` the
/// strand count is the largest index plus one.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);
std::string to_string(const BraidWord& b);

struct Crossing {
    int over = 0;
    int under_in = 0;
    int under_out = 0;
    /// +1: under_out = under_in * over; -1: under_out = under_in *^-1 over.
    int sign = 1;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkDiagram {
    int arcs = 1;
    std::vector<Crossing> crossings;
    /// Partition of the arcs, each part sorted, parts ordered by first arc.
    std::vector<std::vector<int>> components;

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

/// One arc, no crossings.
LinkDiagram unknot();

/// Throws InconsistentArcs unless arc indices are in range, every arc ends
/// and starts at most once under a crossing (and does both or neither),
/// and the components partition the arcs along strand continuation.
void validate_diagram(const LinkDiagram& d);

/// Closure of a braid, strands running downward. In s_k the strand at
/// position k-1 passes over the one at position k; s_k has sign +1.
LinkDiagram braid_closure(const BraidWord& b);

/// Planar diagram code: tuples X(a,b,c,d) (or X[a,b,c,d]) over edge labels,
/// a the incoming under edge, c the outgoing one, b and d the over strand.
/// The sign is positive when the over strand runs from d to b. Empty input
/// yields the unknot and sets `warning`.
LinkDiagram parse_pd(std::string_view text, std::string* warning = nullptr);

/// Same arcs with every crossing sign flipped.
LinkDiagram mirror(const LinkDiagram& d);

/// Generators x0..x{arcs-1}; one Cayley-shaped relation per crossing.
QuandlePresentation wirtinger_quandle(const LinkDiagram& d);

GroupPresentation link_group(const LinkDiagram& d);

/// Free product of the link quandles, factor i being diagram i.
QuandlePresentation split_union(std::span<const LinkDiagram> diagrams);

} // namespace quandle
