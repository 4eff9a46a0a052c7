#pragma once

#include "quandle/presentation.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quandle {

/// One rewrite step on a left-normed word. Positions index the tail.
///
/// - Cancel: drop the inverse pair at position, position + 1.
/// - InsertPair: insert (generator, sign)(generator, -sign) before position.
/// - DropHead / AddHead: head idempotency, x *^s x = x.
/// - ShuffleRight: (a,e)(b,s) -> (b,s)(c,e) where a *^s b = c, by
///   distributivity. ShuffleLeft is the reverse. The fact a *^s b = c comes
///   from a Cayley-shaped relation y *^f z = g, read as y *^f z = g
///   (`forward`) or g *^-f z = y; relation -1 stands for a *^s a = a.
/// - RelationPrefix: replace a prefix equal to one side of a relation by
///   the other side (`forward` = left to right).
/// - ExpandLetter: a tail letter (g, e) where g is the bare side of a
///   relation g = s becomes the left-normed expansion of *^e s;
///   ContractLetter is the reverse. `forward` means the bare side is the
///   relation's left-hand side.
enum class MoveKind {
    Cancel,
    InsertPair,
    DropHead,
    AddHead,
    ShuffleRight,
    ShuffleLeft,
    RelationPrefix,
    ExpandLetter,
    ContractLetter
};

std::string to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(const std::string& s);

struct Move {
    MoveKind kind = MoveKind::Cancel;
    int position = 0;
    std::string generator;
    int sign = 1;
    int relation = -1;
    bool forward = true;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Applies `move`; empty when the move does not match the word.
std::optional<QuandleWord> apply_move(const QuandlePresentation& p, const QuandleWord& w, const Move& move);

struct TraceStep {
    Move move;
    /// The word after the move.
    QuandleWord word;
};

struct Trace {
    QuandleWord start;
    std::vector<TraceStep> steps;

    const QuandleWord& end() const { return steps.empty() ? start : steps.back().word; }
};

/// Re-applies every move and checks the trace connects u to v.
bool replay(const QuandlePresentation& p, const Trace& trace, const QuandleWord& u, const QuandleWord& v);

struct ProofBudget {
    /// Longest word (head included) the search may visit.
    int max_len = 8;
    /// Total nodes stored across both search directions.
    std::uint64_t max_nodes = 20'000;
};

struct ProofStats {
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

/// Bidirectional breadth-first search over the rewrite graph; returns a
/// trace from u to v, or nothing when the budget runs out first. Absence
/// does not mean the words differ.
std::optional<Trace> prove_equal(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    const ProofBudget& budget = {}, ProofStats* stats = nullptr);

} // namespace quandle
