#pragma once

#include "quandle/homomorphism.hpp"
#include "quandle/prover.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace quandle {

/// Starting budgets and caps for the interleaved search. A max_len of 0
/// means max(|u|, |v|) + 4.
struct WpBudget {
    int max_len = 0;
    std::uint64_t max_nodes = 20'000;
    int catalog_order = 3;
    int max_catalog_order = 6;
    std::uint64_t max_assignments = 50'000'000;
    int rounds = 6;
    int jobs = 1;
};

/// Budgets reached when the search stopped.
struct BudgetReport {
    int max_len = 0;
    std::uint64_t max_nodes = 0;
    int catalog_order = 0;
    int rounds = 0;
    std::uint64_t nodes_explored = 0;
    std::uint64_t assignments_tried = 0;
};

enum class Outcome { Equal, Distinct, Unknown };
std::string to_string(Outcome o);

struct WpVerdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<Trace> trace;
    std::optional<SeparationWitness> witness;
    BudgetReport budgets;
    /// Set for Unknown: why no verdict was reached.
    std::string note;
};

/// Alternates prove_equal and separate rounds. After each round the word
/// length bound and node budget double, or the catalog order doubles, in
/// turn. Unknown is returned once `rounds` rounds pass without a verdict.
WpVerdict word_problem(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    std::span<const FiniteQuandle> catalog, const WpBudget& budget = {});

} // namespace quandle
