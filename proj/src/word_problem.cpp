#include "quandle/word_problem.hpp"

#include <algorithm>

namespace quandle {

std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::Equal:
        return "equal";
    case Outcome::Distinct:
        return "distinct";
    case Outcome::Unknown:
        return "unknown";
    }
    return "unknown";
}

WpVerdict word_problem(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    std::span<const FiniteQuandle> catalog, const WpBudget& budget)
{
    p.check_word(u);
    p.check_word(v);

    int catalog_top = 0;
    for (const auto& f : catalog)
        catalog_top = std::max(catalog_top, f.order());
    const int max_catalog = std::min(budget.max_catalog_order, catalog_top);
    int order = std::clamp(budget.catalog_order, 0, max_catalog);

    ProofBudget proof{budget.max_len > 0 ? budget.max_len : static_cast<int>(std::max(u.length(), v.length())) + 4,
        budget.max_nodes};

    WpVerdict verdict;
    ProofStats proof_stats;
    SeparationStats sep_stats;
    for (int round = 0; round < budget.rounds; ++round) {
        verdict.budgets.rounds = round + 1;
        verdict.budgets.max_len = proof.max_len;
        verdict.budgets.max_nodes = proof.max_nodes;
        verdict.budgets.catalog_order = order;

        ProofStats round_proof;
        if (auto trace = prove_equal(p, u, v, proof, &round_proof)) {
            verdict.budgets.nodes_explored = proof_stats.nodes + round_proof.nodes;
            verdict.budgets.assignments_tried = sep_stats.assignments_tried;
            verdict.outcome = Outcome::Equal;
            verdict.trace = std::move(trace);
            return verdict;
        }
        proof_stats.nodes += round_proof.nodes;

        SeparationBudget sep{order, budget.max_assignments, budget.jobs};
        SeparationStats round_sep;
        if (auto witness = separate(p, u, v, catalog, sep, &round_sep)) {
            verdict.budgets.nodes_explored = proof_stats.nodes;
            verdict.budgets.assignments_tried = sep_stats.assignments_tried + round_sep.assignments_tried;
            verdict.outcome = Outcome::Distinct;
            verdict.witness = std::move(witness);
            return verdict;
        }
        sep_stats.assignments_tried += round_sep.assignments_tried;

        // even rounds grow the prover, odd rounds the catalog
        if (round % 2 == 1 && order < max_catalog) {
            order = std::min(max_catalog, order * 2);
        } else {
            proof.max_len *= 2;
            proof.max_nodes *= 2;
        }
    }

    verdict.budgets.nodes_explored = proof_stats.nodes;
    verdict.budgets.assignments_tried = sep_stats.assignments_tried;
    verdict.note = "no proof within word length " + std::to_string(verdict.budgets.max_len) + " and " +
                   std::to_string(verdict.budgets.max_nodes) + " nodes, no separating quandle up to order " +
                   std::to_string(verdict.budgets.catalog_order) +
                   "; no bound relating word length to the order of a separating quandle is known, so the "
                   "search cannot conclude";
    return verdict;
}

} // namespace quandle
