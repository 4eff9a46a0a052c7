#include "quandle/catalog_cache.hpp"
#include "quandle/json_io.hpp"
#include "quandle/link.hpp"
#include "quandle/word_problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

using namespace quandle;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2 };

// Input or usage problems; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int catalog_max_order = 6;
    int budget_len = 0;
    std::uint64_t budget_nodes = 20'000;
    int budget_catalog = 3;
    int budget_rounds = 6;
    std::string format = "json";
    int jobs = 1;
    std::uint64_t seed = 1;
};

// Where a presentation comes from; at most one kind may be given.
struct Source {
    std::string presentation_file;
    int free_rank = 0;
    std::vector<std::string> free_names;
    std::vector<std::string> braids;
    std::vector<std::string> pds;
    int strands = 0;
    bool mirror = false;
};

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    }
    catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void add_source_options(CLI::App* cmd, Source& s)
{
    cmd->add_option("--presentation", s.presentation_file, "Presentation JSON file");
    cmd->add_option("--free", s.free_rank, "Free quandle on x1..xN")->check(CLI::PositiveNumber);
    cmd->add_option("--generators", s.free_names, "Free quandle on the given names")->delimiter(',');
    cmd->add_option("--braid", s.braids, "Braid word, e.g. \"s1 s2^-1\"; repeat for a split union");
    cmd->add_option("--pd", s.pds, "PD code, e.g. \"X(1,4,2,5) ...\"; repeat for a split union");
    cmd->add_option("--strands", s.strands, "Strand count for --braid")->check(CLI::PositiveNumber);
    cmd->add_flag("--mirror", s.mirror, "Mirror every diagram");
}

std::vector<LinkDiagram> diagrams_of(const Source& s)
{
    std::vector<LinkDiagram> out;
    for (const auto& b : s.braids) {
        auto braid = parse_braid(b, s.strands > 0 ? std::optional<int>(s.strands) : std::nullopt);
        out.push_back(braid_closure(braid));
    }
    for (const auto& pd : s.pds) {
        std::string warning;
        out.push_back(parse_pd(pd, &warning));
        if (!warning.empty())
            std::cerr << "warning: " << warning << '\n';
    }
    if (s.mirror)
        for (auto& d : out)
            d = mirror(d);
    return out;
}

QuandlePresentation presentation_of(const Source& s)
{
    const int kinds = !s.presentation_file.empty() + (s.free_rank > 0) + !s.free_names.empty() +
                      (!s.braids.empty() || !s.pds.empty());
    if (kinds != 1)
        throw UsageError("give exactly one of --presentation, --free, --generators, --braid/--pd");
    if (!s.presentation_file.empty())
        return presentation_from_json(read_json(s.presentation_file));
    if (s.free_rank > 0)
        return free_quandle(s.free_rank);
    if (!s.free_names.empty())
        return free_quandle(s.free_names);
    const auto ds = diagrams_of(s);
    return ds.size() == 1 ? wirtinger_quandle(ds.front()) : split_union(ds);
}

std::vector<FiniteQuandle> load_catalog(const Config& c, int max_order)
{
    return cached_catalog(max_order, {std::max(6, c.catalog_max_order), c.jobs});
}

// "R<n>", "T<n>", "Q<n>_<k>" (catalog entry) or a Cayley JSON file.
FiniteQuandle target_of(const std::string& name, const Config& c)
{
    static const std::regex builtin(R"(([RT])(\d{1,4}))");
    static const std::regex census(R"(Q(\d)_(\d+))");
    std::smatch m;
    if (std::regex_match(name, m, builtin)) {
        const int n = std::stoi(m[2]);
        if (n < 1)
            throw UsageError("quandle order must be positive");
        return m[1] == "R" ? dihedral(n) : trivial(n);
    }
    if (std::regex_match(name, m, census)) {
        const int n = std::stoi(m[1]);
        for (const auto& q : load_catalog(c, n))
            if (q.label() == name)
                return q;
        throw UsageError("no catalog entry " + name);
    }
    return quandle_from_json(read_json(name));
}

QuandleWord word_arg(const std::string& text)
{
    try {
        return parse_word(text);
    }
    catch (const SyntaxError& e) {
        throw UsageError("cannot parse word \"" + text + "\": " + e.what());
    }
}

void emit(const Config& c, const Json& j, const std::string& text)
{
    if (c.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string table_text(const FiniteQuandle& q)
{
    std::ostringstream out;
    const int w = static_cast<int>(std::to_string(q.order() - 1).size()) + 1;
    out << std::setw(w + 1) << "*" << " |";
    for (int y = 0; y < q.order(); ++y)
        out << std::setw(w) << y;
    out << '\n' << std::string(static_cast<std::size_t>(w + 3), '-') << std::string(q.order() * w, '-') << '\n';
    for (int x = 0; x < q.order(); ++x) {
        out << std::setw(w + 1) << x << " |";
        for (int y = 0; y < q.order(); ++y)
            out << std::setw(w) << q.op(x, y);
        out << '\n';
    }
    return out.str();
}

std::string presentation_text(const QuandlePresentation& p)
{
    std::ostringstream out;
    out << "generators:";
    for (const auto& g : p.generators()) {
        out << ' ' << g.name;
        if (g.factor)
            out << '[' << *g.factor << ']';
    }
    out << "\nrelations:  " << p.relations().size() << '\n';
    for (const auto& r : p.relations())
        out << "  " << to_string(r.lhs) << " = " << to_string(r.rhs) << '\n';
    return out.str();
}

std::string group_text(const GroupPresentation& g)
{
    std::ostringstream out;
    out << "generators:";
    for (const auto& name : g.generators)
        out << ' ' << name;
    out << "\nrelators:   " << g.relators.size() << '\n';
    for (const auto& r : g.relators)
        out << "  " << to_letter_code(r) << '\n';
    return out.str();
}

std::string witness_text(const SeparationWitness& w)
{
    std::ostringstream out;
    out << "heuristic:  " << to_string(w.heuristic) << '\n'
        << "target:     " << w.hom.target.label() << " (order " << w.hom.target.order() << ")\n"
        << "images:     " << w.left_image << " != " << w.right_image << '\n'
        << "assignment:";
    for (const auto& [name, value] : w.hom.assignment())
        out << ' ' << name << "=" << value;
    out << '\n' << table_text(w.hom.target);
    return out.str();
}

std::string verdict_text(const WpVerdict& v)
{
    std::ostringstream out;
    out << "outcome:    " << to_string(v.outcome) << '\n';
    if (v.trace) {
        out << "trace:      " << v.trace->steps.size() << " steps\n";
        out << "  " << to_string(v.trace->start) << '\n';
        for (const auto& s : v.trace->steps)
            out << "  " << std::left << std::setw(16) << to_string(s.move.kind) << std::right << to_string(s.word)
                << '\n';
    }
    if (v.witness)
        out << witness_text(*v.witness);
    out << "budgets:    len " << v.budgets.max_len << ", nodes " << v.budgets.max_nodes << ", catalog order "
        << v.budgets.catalog_order << ", rounds " << v.budgets.rounds << '\n';
    if (!v.note.empty())
        out << "note:       " << v.note << '\n';
    return out.str();
}

WpBudget wp_budget(const Config& c)
{
    WpBudget b;
    b.max_len = c.budget_len;
    b.max_nodes = c.budget_nodes;
    b.catalog_order = std::min(c.budget_catalog, c.catalog_max_order);
    b.max_catalog_order = c.catalog_max_order;
    b.rounds = c.budget_rounds;
    b.jobs = c.jobs;
    return b;
}

QuandleWord random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_len)
{
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, max_len - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    QuandleWord w(gens[pick(rng)]);
    for (int i = len(rng); i > 0; --i)
        w.tail.push_back({gens[pick(rng)], coin(rng) ? 1 : -1});
    return w;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite and finitely presented quandles: census, colorings, word problem"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_option("--catalog-max-order", c.catalog_max_order, "Largest catalog order used (1..6)")
        ->check(CLI::Range(1, 6));
    app.add_option("--budget-len", c.budget_len, "Starting word length bound for the prover (0 = automatic)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget-nodes", c.budget_nodes, "Starting node budget for the prover");
    app.add_option("--budget-catalog", c.budget_catalog, "Starting catalog order for separation")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget-rounds", c.budget_rounds, "Rounds of the interleaved search")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", c.seed, "Seed for fuzz");

    std::string file;
    auto* validate = app.add_subcommand("validate", "Check a Cayley table against the quandle axioms");
    validate->add_option("file", file, "Cayley JSON")->required();

    int order = 0;
    bool raw = false;
    auto* catalog = app.add_subcommand("catalog", "Quandles of one order, up to isomorphism");
    catalog->add_option("n", order, "Order")->required();
    catalog->add_flag("--labeled", raw, "Every labeled table instead of one per class");

    Source src;
    std::string target;
    auto* colorings = app.add_subcommand("colorings", "Count homomorphisms to a finite quandle");
    add_source_options(colorings, src);
    colorings->add_option("--quandle", target, "R<n>, T<n>, Q<n>_<k> or a Cayley JSON file")->required();

    std::string u_text;
    std::string v_text;
    auto* separate_cmd = app.add_subcommand("separate", "Find a finite quandle telling two words apart");
    add_source_options(separate_cmd, src);
    separate_cmd->add_option("u", u_text)->required();
    separate_cmd->add_option("v", v_text)->required();

    auto* wp = app.add_subcommand("wp", "Decide whether two words are equal, within budgets");
    add_source_options(wp, src);
    wp->add_option("u", u_text)->required();
    wp->add_option("v", v_text)->required();

    auto* assoc = app.add_subcommand("assoc", "Associated group presentation");
    add_source_options(assoc, src);

    auto* link = app.add_subcommand("link", "Diagram, link quandle and link group of braids or PD codes");
    add_source_options(link, src);

    int fuzz_count = 20;
    int fuzz_len = 4;
    auto* fuzz = app.add_subcommand("fuzz", "Run wp on random word pairs drawn with --seed");
    add_source_options(fuzz, src);
    fuzz->add_option("--count", fuzz_count, "Number of pairs")->check(CLI::PositiveNumber);
    fuzz->add_option("--length", fuzz_len, "Longest word")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (validate->parsed()) {
            auto [table, label] = table_from_json(read_json(file));
            try {
                auto violation = find_axiom_violation(table);
                if (!violation) {
                    emit(c, {{"valid", true}, {"order", table.size()}, {"label", label}},
                        "valid quandle of order " + std::to_string(table.size()) + "\n");
                    return kOk;
                }
                Json j = violation_to_json(*violation);
                j["valid"] = false;
                std::ostringstream text;
                text << "axiom " << violation->axiom() << " fails at";
                for (int w : violation->witness())
                    text << ' ' << w;
                emit(c, j, text.str() + "\n");
            }
            catch (const InvalidTable& e) {
                emit(c, {{"valid", false}, {"error", e.what()}}, std::string("invalid table: ") + e.what() + "\n");
            }
            return kDomain;
        }

        if (catalog->parsed()) {
            if (order > c.catalog_max_order)
                throw BoundExceeded(order, c.catalog_max_order);
            std::vector<FiniteQuandle> level;
            if (raw) {
                level = enumerate_quandles(order, false, {c.catalog_max_order, c.jobs});
            }
            else {
                level = load_catalog(c, order);
                std::erase_if(level, [&](const auto& q) { return q.order() != order; });
            }
            std::ostringstream text;
            text << level.size() << " quandles of order " << order << '\n';
            for (const auto& q : level)
                text << '\n' << q.label() << '\n' << table_text(q);
            emit(c, catalog_to_json(level), text.str());
            return kOk;
        }

        if (colorings->parsed()) {
            const auto p = presentation_of(src);
            const auto f = target_of(target, c);
            const auto n = count_colorings(p, f, c.jobs);
            emit(c, {{"colorings", n}, {"quandle", f.label()}, {"order", f.order()}}, std::to_string(n) + "\n");
            return kOk;
        }

        if (separate_cmd->parsed()) {
            const auto p = presentation_of(src);
            const auto u = word_arg(u_text);
            const auto v = word_arg(v_text);
            const auto cat = load_catalog(c, c.catalog_max_order);
            SeparationStats stats;
            auto w = separate(p, u, v, cat, {c.catalog_max_order, wp_budget(c).max_assignments, c.jobs}, &stats);
            if (!w) {
                emit(c,
                    {{"witness", nullptr}, {"catalog_order", stats.catalog_order_reached},
                        {"assignments_tried", stats.assignments_tried}},
                    "no separating quandle up to order " + std::to_string(c.catalog_max_order) + "\n");
                return kDomain;
            }
            emit(c, {{"witness", witness_to_json(*w)}}, witness_text(*w));
            return kOk;
        }

        if (wp->parsed()) {
            const auto p = presentation_of(src);
            const auto u = word_arg(u_text);
            const auto v = word_arg(v_text);
            const auto cat = load_catalog(c, c.catalog_max_order);
            const auto verdict = word_problem(p, u, v, cat, wp_budget(c));
            emit(c, verdict_to_json(verdict), verdict_text(verdict));
            return verdict.outcome == Outcome::Unknown ? kDomain : kOk;
        }

        if (assoc->parsed()) {
            const auto g = associated_group(presentation_of(src));
            emit(c, group_presentation_to_json(g), group_text(g));
            return kOk;
        }

        if (link->parsed()) {
            if (src.braids.empty() && src.pds.empty())
                throw UsageError("link needs --braid or --pd");
            const auto ds = diagrams_of(src);
            const auto p = presentation_of(src);
            Json diagrams = Json::array();
            std::ostringstream text;
            for (const auto& d : ds) {
                diagrams.push_back(diagram_to_json(d));
                text << "diagram:    " << d.arcs << " arcs, " << d.crossings.size() << " crossings, "
                     << d.components.size() << " components\n";
            }
            const auto g = associated_group(p);
            text << presentation_text(p) << group_text(g);
            emit(c,
                {{"diagrams", diagrams}, {"presentation", presentation_to_json(p)},
                    {"group", group_presentation_to_json(g)}},
                text.str());
            return kOk;
        }

        if (fuzz->parsed()) {
            const auto p = presentation_of(src);
            const auto gens = p.generator_names();
            const auto cat = load_catalog(c, c.catalog_max_order);
            std::mt19937_64 rng(c.seed);
            Json runs = Json::array();
            std::ostringstream text;
            int unknown = 0;
            for (int i = 0; i < fuzz_count; ++i) {
                const auto u = random_word(rng, gens, fuzz_len);
                const auto v = random_word(rng, gens, fuzz_len);
                const auto verdict = word_problem(p, u, v, cat, wp_budget(c));
                unknown += verdict.outcome == Outcome::Unknown;
                runs.push_back({{"u", to_string(u)}, {"v", to_string(v)}, {"verdict", verdict_to_json(verdict)}});
                text << std::left << std::setw(10) << to_string(verdict.outcome) << std::right << to_string(u)
                     << "  vs  " << to_string(v) << '\n';
            }
            emit(c, {{"seed", c.seed}, {"runs", runs}}, text.str());
            return unknown > 0 ? kDomain : kOk;
        }
    }
    catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const SyntaxError& e) {
        std::cerr << "error: syntax error at " << e.position() << ": " << e.what() << '\n';
        return kUsage;
    }
    catch (const Error& e) {
        emit(c, {{"error", e.what()}}, std::string("error: ") + e.what() + "\n");
        return kDomain;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
