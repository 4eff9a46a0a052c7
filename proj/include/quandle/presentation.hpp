#pragma once

#include "quandle/word.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quandle {

struct GeneratorSymbol {
    std::string name;
    /// Which free-product factor the generator came from, if any.
    std::optional<int> factor;

    friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

struct Relation {
    QuandleWord lhs;
    QuandleWord rhs;

    friend bool operator==(const Relation& a, const Relation& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
};

/// A finitely presented quandle <X | R>. Generator names are unique and
/// every relation only mentions declared generators.
class QuandlePresentation {
public:
    QuandlePresentation() = default;
    QuandlePresentation(std::vector<GeneratorSymbol> generators, std::vector<Relation> relations);

    /// Generators without factor tags; relation sides in the surface grammar.
    static QuandlePresentation parse(const std::vector<std::string>& generators,
        const std::vector<std::pair<std::string, std::string>>& relations);

    const std::vector<GeneratorSymbol>& generators() const noexcept { return generators_; }
    const std::vector<Relation>& relations() const noexcept { return relations_; }
    std::vector<std::string> generator_names() const;

    std::optional<int> index_of(const std::string& name) const;
    bool has_generator(const std::string& name) const { return index_of(name).has_value(); }
    /// Throws UnknownGenerator for the first undeclared symbol of `w`.
    void check_word(const QuandleWord& w) const;

    /// Factor tag of a generator; untagged generators count as factor 0.
    int factor_of(const std::string& name) const;
    int factor_of(int generator) const;
    /// Number of distinct factors (0 for an empty presentation).
    int factor_count() const;
    bool is_free() const noexcept { return relations_.empty(); }

    friend bool operator==(const QuandlePresentation&, const QuandlePresentation&) = default;

private:
    std::vector<GeneratorSymbol> generators_;
    std::vector<Relation> relations_;
};

/// Renames the generators of `right` apart from those of `left` (colliding
/// names get a `#<factor>` suffix) and returns the renaming as old -> new.
std::vector<std::pair<std::string, std::string>> rename_apart(const QuandlePresentation& left,
    const QuandlePresentation& right);

/// <X u Y | R u S>, with factor tags: left's tags (or 0) followed by right's
/// tags shifted past them.
QuandlePresentation free_product(const QuandlePresentation& left, const QuandlePresentation& right);

/// FQ_n on x1, ..., xn, each generator its own factor.
QuandlePresentation free_quandle(int n);
/// FQ on the given names, each generator its own factor.
QuandlePresentation free_quandle(const std::vector<std::string>& names);

/// Generators p0..p{n-1} with one relation p_x * p_y = p_{x*y} per table cell.
QuandlePresentation table_presentation(const FiniteQuandle& q, const std::string& prefix = "");

/// Generators sorted by name and relations sorted by text, for structural
/// comparison.
QuandlePresentation canonical(const QuandlePresentation& p);

QuandleWord rename(const QuandleWord& w, const std::vector<std::pair<std::string, std::string>>& renaming);

/// Equality in a free quandle: eta(u) == eta(v) after free reduction.
bool free_quandle_equal(const QuandleWord& u, const QuandleWord& v);
/// As above; throws NotFreePresentation if `p` has relations.
bool free_quandle_equal(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v);

} // namespace quandle
