#include "quandle/json_io.hpp"

namespace quandle {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw FormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string as_string(const Json& j, const char* what)
{
    if (!j.is_string())
        throw FormatError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<int> int_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw FormatError(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& e : j)
        out.push_back(as_int(e, what));
    return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const char* what)
{
    if (!j.is_array())
        throw FormatError(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> out;
    for (const auto& row : j)
        out.push_back(int_list(row, what));
    return out;
}

Heuristic heuristic_from_string(const std::string& s)
{
    for (auto h : {Heuristic::FactorProjection, Heuristic::FreeProjection, Heuristic::EtaConjugacy, Heuristic::Catalog})
        if (to_string(h) == s)
            return h;
    throw FormatError("unknown heuristic \"" + s + "\"");
}

} // namespace

Json quandle_to_json(const FiniteQuandle& q)
{
    return {{"order", q.order()}, {"table", q.table()}, {"label", q.label()}};
}

std::pair<Table, std::string> table_from_json(const Json& j)
{
    Table table = int_matrix(field(j, "table"), "table");
    if (j.contains("order") && as_int(j.at("order"), "order") != static_cast<int>(table.size()))
        throw InvalidTable("order does not match the number of rows");
    std::string label = j.contains("label") ? as_string(j.at("label"), "label") : std::string();
    return {std::move(table), std::move(label)};
}

FiniteQuandle quandle_from_json(const Json& j)
{
    auto [table, label] = table_from_json(j);
    return FiniteQuandle::validate(table, std::move(label));
}

Json group_to_json(const FiniteGroup& g)
{
    Json j = {{"order", g.order()}, {"mul", g.table()}, {"inv", g.inverses()}, {"id", g.identity()}};
    if (!g.label().empty())
        j["label"] = g.label();
    return j;
}

FiniteGroup group_from_json(const Json& j)
{
    auto mul = int_matrix(field(j, "mul"), "mul");
    auto inv = int_list(field(j, "inv"), "inv");
    int id = as_int(field(j, "id"), "id");
    if (j.contains("order") && as_int(j.at("order"), "order") != static_cast<int>(mul.size()))
        throw InvalidGroup("order does not match the number of rows");
    std::string label = j.contains("label") ? as_string(j.at("label"), "label") : std::string();
    return FiniteGroup::from_table(std::move(mul), std::move(inv), id, std::move(label));
}

Json catalog_to_json(std::span<const FiniteQuandle> catalog)
{
    Json out = Json::array();
    for (const auto& q : catalog)
        out.push_back(quandle_to_json(q));
    return out;
}

std::vector<FiniteQuandle> catalog_from_json(const Json& j)
{
    if (!j.is_array())
        throw FormatError("a catalog is an array of quandles");
    std::vector<FiniteQuandle> out;
    for (const auto& e : j)
        out.push_back(quandle_from_json(e));
    return out;
}

Json presentation_to_json(const QuandlePresentation& p)
{
    Json gens = Json::array();
    Json factors = Json::array();
    bool tagged = false;
    for (const auto& g : p.generators()) {
        gens.push_back(g.name);
        factors.push_back(g.factor.value_or(0));
        tagged = tagged || g.factor.has_value();
    }
    Json rels = Json::array();
    for (const auto& r : p.relations())
        rels.push_back({to_string(r.lhs), to_string(r.rhs)});
    Json j = {{"generators", gens}, {"relations", rels}};
    if (tagged)
        j["factors"] = factors;
    return j;
}

QuandlePresentation presentation_from_json(const Json& j)
{
    const Json& gj = field(j, "generators");
    if (!gj.is_array())
        throw FormatError("generators must be an array");
    std::vector<int> factors;
    if (j.contains("factors")) {
        factors = int_list(j.at("factors"), "factors");
        if (factors.size() != gj.size())
            throw FormatError("factors must have one entry per generator");
    }
    std::vector<GeneratorSymbol> gens;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        GeneratorSymbol g{as_string(gj[i], "generator"), std::nullopt};
        if (!factors.empty())
            g.factor = factors[i];
        gens.push_back(std::move(g));
    }
    std::vector<Relation> rels;
    if (j.contains("relations")) {
        const Json& rj = j.at("relations");
        if (!rj.is_array())
            throw FormatError("relations must be an array");
        for (const auto& r : rj) {
            if (!r.is_array() || r.size() != 2)
                throw FormatError("a relation is a pair of words");
            rels.push_back({parse_word(as_string(r[0], "relation side")), parse_word(as_string(r[1], "relation side"))});
        }
    }
    return {std::move(gens), std::move(rels)};
}

Json group_presentation_to_json(const GroupPresentation& g)
{
    Json codes = Json::array();
    Json letters = Json::array();
    for (const auto& r : g.relators) {
        codes.push_back(to_letter_code(r));
        Json word = Json::array();
        for (const auto& l : r.letters())
            word.push_back({l.generator, l.sign});
        letters.push_back(word);
    }
    return {{"generators", g.generators}, {"relators", codes}, {"relator_letters", letters}};
}

Json diagram_to_json(const LinkDiagram& d)
{
    Json crossings = Json::array();
    for (const auto& c : d.crossings)
        crossings.push_back({c.over, c.under_in, c.under_out, c.sign});
    return {{"arcs", d.arcs}, {"crossings", crossings}, {"components", d.components}};
}

LinkDiagram diagram_from_json(const Json& j)
{
    LinkDiagram d;
    d.arcs = as_int(field(j, "arcs"), "arcs");
    for (const auto& c : int_matrix(field(j, "crossings"), "crossings")) {
        if (c.size() != 4)
            throw FormatError("a crossing is [over, under_in, under_out, sign]");
        d.crossings.push_back({c[0], c[1], c[2], c[3]});
    }
    d.components = int_matrix(field(j, "components"), "components");
    validate_diagram(d);
    return d;
}

Json violation_to_json(const AxiomViolation& v)
{
    return {{"axiom", v.axiom()}, {"witness", v.witness()}};
}

Json witness_to_json(const SeparationWitness& w)
{
    Json assignment = Json::object();
    for (const auto& [name, value] : w.hom.assignment())
        assignment[name] = value;
    return {{"heuristic", to_string(w.heuristic)},
        {"source", presentation_to_json(w.hom.source)},
        {"target", quandle_to_json(w.hom.target)},
        {"values", w.hom.values},
        {"assignment", assignment},
        {"left_image", w.left_image},
        {"right_image", w.right_image}};
}

SeparationWitness witness_from_json(const Json& j)
{
    Homomorphism hom{presentation_from_json(field(j, "source")), quandle_from_json(field(j, "target")),
        int_list(field(j, "values"), "values")};
    if (hom.values.size() != hom.source.generators().size())
        throw FormatError("values must have one entry per generator");
    return {std::move(hom), as_int(field(j, "left_image"), "left_image"),
        as_int(field(j, "right_image"), "right_image"),
        heuristic_from_string(as_string(field(j, "heuristic"), "heuristic"))};
}

Json trace_to_json(const Trace& t)
{
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json step = {{"move", to_string(s.move.kind)}, {"position", s.move.position}, {"word", to_string(s.word)}};
        if (!s.move.generator.empty())
            step["generator"] = s.move.generator;
        step["sign"] = s.move.sign;
        step["relation"] = s.move.relation;
        step["forward"] = s.move.forward;
        steps.push_back(std::move(step));
    }
    return steps;
}

Trace trace_from_json(const Json& j, const QuandleWord& start)
{
    if (!j.is_array())
        throw FormatError("a trace is an array of steps");
    Trace t{start, {}};
    for (const auto& s : j) {
        Move m;
        auto kind = move_kind_from_string(as_string(field(s, "move"), "move"));
        if (!kind)
            throw FormatError("unknown move kind");
        m.kind = *kind;
        m.position = as_int(field(s, "position"), "position");
        if (s.contains("generator"))
            m.generator = as_string(s.at("generator"), "generator");
        m.sign = as_int(field(s, "sign"), "sign");
        m.relation = as_int(field(s, "relation"), "relation");
        const Json& fwd = field(s, "forward");
        if (!fwd.is_boolean())
            throw FormatError("forward must be a boolean");
        m.forward = fwd.get<bool>();
        t.steps.push_back({m, parse_word(as_string(field(s, "word"), "word"))});
    }
    return t;
}

Json verdict_to_json(const WpVerdict& v)
{
    Json j = {{"outcome", to_string(v.outcome)},
        {"witness", v.witness ? witness_to_json(*v.witness) : Json(nullptr)},
        {"trace", v.trace ? trace_to_json(*v.trace) : Json(nullptr)},
        {"budgets",
            {{"max_len", v.budgets.max_len},
                {"max_nodes", v.budgets.max_nodes},
                {"catalog_order", v.budgets.catalog_order},
                {"rounds", v.budgets.rounds},
                {"nodes_explored", v.budgets.nodes_explored},
                {"assignments_tried", v.budgets.assignments_tried}}}};
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

} // namespace quandle
