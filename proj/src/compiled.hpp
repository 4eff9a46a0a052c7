#pragma once

// Integer-indexed forms of words and presentations shared by the
// homomorphism search and the rewrite prover.

#include "quandle/finite_quandle.hpp"
#include "quandle/presentation.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace quandle::detail {

struct CompiledLetter {
    int generator;
    int sign;

    friend bool operator==(const CompiledLetter&, const CompiledLetter&) = default;
};

struct CompiledWord {
    int head = 0;
    std::vector<CompiledLetter> tail;

    friend bool operator==(const CompiledWord&, const CompiledWord&) = default;
};

inline CompiledWord compile(const QuandleWord& w, const QuandlePresentation& p)
{
    p.check_word(w);
    CompiledWord out{*p.index_of(w.head), {}};
    out.tail.reserve(w.tail.size());
    for (const auto& l : w.tail)
        out.tail.push_back({*p.index_of(l.generator), l.sign > 0 ? 1 : -1});
    return out;
}

inline QuandleWord decompile(const CompiledWord& w, const QuandlePresentation& p)
{
    QuandleWord out(p.generators()[w.head].name);
    for (const auto& l : w.tail)
        out.tail.push_back({p.generators()[l.generator].name, l.sign});
    return out;
}

inline int max_generator(const CompiledWord& w)
{
    int m = w.head;
    for (const auto& l : w.tail)
        m = std::max(m, l.generator);
    return m;
}

inline int evaluate(const CompiledWord& w, const FiniteQuandle& q, std::span<const int> values)
{
    int x = values[w.head];
    for (const auto& l : w.tail)
        x = q.act(x, values[l.generator], l.sign);
    return x;
}

struct CompiledRelation {
    CompiledWord lhs;
    CompiledWord rhs;
    /// Relation can be checked once generators 0..ready are assigned.
    int ready = 0;
};

inline std::vector<CompiledRelation> compile_relations(const QuandlePresentation& p)
{
    std::vector<CompiledRelation> out;
    for (const auto& r : p.relations()) {
        CompiledRelation c{compile(r.lhs, p), compile(r.rhs, p), 0};
        c.ready = std::max(max_generator(c.lhs), max_generator(c.rhs));
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace quandle::detail
