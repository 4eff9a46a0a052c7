#include "quandle/presentation.hpp"

#include <algorithm>
#include <set>

namespace quandle {

QuandlePresentation::QuandlePresentation(std::vector<GeneratorSymbol> generators, std::vector<Relation> relations) :
    generators_(std::move(generators)),
    relations_(std::move(relations))
{
    std::set<std::string> names;
    for (const auto& g : generators_)
        if (!names.insert(g.name).second)
            throw Error("duplicate generator '" + g.name + "'");
    for (const auto& r : relations_) {
        check_word(r.lhs);
        check_word(r.rhs);
    }
}

QuandlePresentation QuandlePresentation::parse(const std::vector<std::string>& generators,
    const std::vector<std::pair<std::string, std::string>>& relations)
{
    std::vector<GeneratorSymbol> gens;
    for (const auto& g : generators)
        gens.push_back({g, std::nullopt});
    std::vector<Relation> rels;
    for (const auto& [l, r] : relations)
        rels.push_back({parse_word(l), parse_word(r)});
    return {std::move(gens), std::move(rels)};
}

std::vector<std::string> QuandlePresentation::generator_names() const
{
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_)
        out.push_back(g.name);
    return out;
}

std::optional<int> QuandlePresentation::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

void QuandlePresentation::check_word(const QuandleWord& w) const
{
    if (!has_generator(w.head))
        throw UnknownGenerator(w.head);
    for (const auto& l : w.tail)
        if (!has_generator(l.generator))
            throw UnknownGenerator(l.generator);
}

int QuandlePresentation::factor_of(const std::string& name) const
{
    auto i = index_of(name);
    if (!i)
        throw UnknownGenerator(name);
    return factor_of(*i);
}

int QuandlePresentation::factor_of(int generator) const
{
    return generators_[generator].factor.value_or(0);
}

int QuandlePresentation::factor_count() const
{
    int count = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        count = std::max(count, factor_of(static_cast<int>(i)) + 1);
    return count;
}

QuandleWord rename(const QuandleWord& w, const std::vector<std::pair<std::string, std::string>>& renaming)
{
    auto map = [&](const std::string& name) {
        for (const auto& [from, to] : renaming)
            if (from == name)
                return to;
        return name;
    };
    QuandleWord out(map(w.head));
    for (const auto& l : w.tail)
        out.tail.push_back({map(l.generator), l.sign});
    out.reduced = w.reduced;
    return out;
}

std::vector<std::pair<std::string, std::string>> rename_apart(const QuandlePresentation& left,
    const QuandlePresentation& right)
{
    std::set<std::string> taken;
    for (const auto& g : left.generators())
        taken.insert(g.name);
    for (const auto& g : right.generators())
        taken.insert(g.name);

    const int shift = left.factor_count();
    std::vector<std::pair<std::string, std::string>> renaming;
    for (std::size_t i = 0; i < right.generators().size(); ++i) {
        const auto& name = right.generators()[i].name;
        if (!left.has_generator(name))
            continue;
        const std::string suffix = "#" + std::to_string(shift + right.factor_of(static_cast<int>(i)));
        std::string fresh = name + suffix;
        while (taken.contains(fresh))
            fresh += suffix;
        taken.insert(fresh);
        renaming.emplace_back(name, fresh);
    }
    return renaming;
}

QuandlePresentation free_product(const QuandlePresentation& left, const QuandlePresentation& right)
{
    const auto renaming = rename_apart(left, right);
    const int shift = left.factor_count();

    std::vector<GeneratorSymbol> gens;
    for (std::size_t i = 0; i < left.generators().size(); ++i)
        gens.push_back({left.generators()[i].name, left.factor_of(static_cast<int>(i))});
    for (std::size_t i = 0; i < right.generators().size(); ++i) {
        QuandleWord renamed = rename(QuandleWord(right.generators()[i].name), renaming);
        gens.push_back({renamed.head, shift + right.factor_of(static_cast<int>(i))});
    }

    std::vector<Relation> rels = left.relations();
    for (const auto& r : right.relations())
        rels.push_back({rename(r.lhs, renaming), rename(r.rhs, renaming)});
    return {std::move(gens), std::move(rels)};
}

QuandlePresentation free_quandle(int n)
{
    if (n < 1)
        throw Error("free quandle rank must be positive");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return free_quandle(names);
}

QuandlePresentation free_quandle(const std::vector<std::string>& names)
{
    QuandlePresentation out;
    for (const auto& name : names)
        out = free_product(out, QuandlePresentation({{name, std::nullopt}}, {}));
    return out;
}

QuandlePresentation table_presentation(const FiniteQuandle& q, const std::string& prefix)
{
    auto name = [&](int x) { return prefix + std::to_string(x); };
    std::vector<GeneratorSymbol> gens;
    for (int x = 0; x < q.order(); ++x)
        gens.push_back({name(x), std::nullopt});
    std::vector<Relation> rels;
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            rels.push_back({QuandleWord(name(x), {{name(y), 1}}), QuandleWord(name(q.op(x, y)))});
    return {std::move(gens), std::move(rels)};
}

QuandlePresentation canonical(const QuandlePresentation& p)
{
    auto gens = p.generators();
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    auto rels = p.relations();
    std::sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
        return std::pair(to_string(a.lhs), to_string(a.rhs)) < std::pair(to_string(b.lhs), to_string(b.rhs));
    });
    return {std::move(gens), std::move(rels)};
}

bool free_quandle_equal(const QuandleWord& u, const QuandleWord& v)
{
    return eta(u) == eta(v);
}

bool free_quandle_equal(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v)
{
    if (!p.is_free())
        throw NotFreePresentation("presentation has " + std::to_string(p.relations().size()) + " relations");
    p.check_word(u);
    p.check_word(v);
    return free_quandle_equal(u, v);
}

} // namespace quandle
