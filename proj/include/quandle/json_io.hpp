#pragma once

#include "quandle/associated_group.hpp"
#include "quandle/errors.hpp"
#include "quandle/finite_quandle.hpp"
#include "quandle/homomorphism.hpp"
#include "quandle/link.hpp"
#include "quandle/word_problem.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace quandle {

using Json = nlohmann::json;

/// {"order": n, "table": [[...]], "label": "..."}
Json quandle_to_json(const FiniteQuandle& q);
/// The raw table and label, unvalidated. Throws FormatError.
std::pair<Table, std::string> table_from_json(const Json& j);
/// Validated; throws FormatError, InvalidTable or AxiomViolation.
FiniteQuandle quandle_from_json(const Json& j);

/// {"order": n, "mul": [[...]], "inv": [...], "id": e}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json catalog_to_json(std::span<const FiniteQuandle> catalog);
std::vector<FiniteQuandle> catalog_from_json(const Json& j);

/// {"generators": [...], "relations": [["a*b", "b"], ...]}, plus "factors"
/// when some generator carries a factor tag.
Json presentation_to_json(const QuandlePresentation& p);
QuandlePresentation presentation_from_json(const Json& j);

/// {"generators": [...], "relators": ["c B a b C", ...],
///  "relator_letters": [[["c", -1], ...], ...]}
Json group_presentation_to_json(const GroupPresentation& g);

/// {"arcs": n, "crossings": [[o, ui, uo, s], ...], "components": [[...]]}
Json diagram_to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const Json& j);

/// {"axiom": k, "witness": [...]}
Json violation_to_json(const AxiomViolation& v);

/// Embeds the whole target table, so the witness replays on its own.
Json witness_to_json(const SeparationWitness& w);
SeparationWitness witness_from_json(const Json& j);

/// One object per step: the move fields and the resulting word.
Json trace_to_json(const Trace& t);
Trace trace_from_json(const Json& j, const QuandleWord& start);

/// {"outcome": ..., "witness": {...}|null, "trace": [...]|null, "budgets": {...}}
Json verdict_to_json(const WpVerdict& v);

} // namespace quandle
