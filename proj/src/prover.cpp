#include "quandle/prover.hpp"

#include "compiled.hpp"

#include <array>
#include <unordered_map>

namespace quandle {

using detail::CompiledLetter;
using detail::CompiledWord;

std::string to_string(MoveKind k)
{
    switch (k) {
    case MoveKind::Cancel:
        return "cancel";
    case MoveKind::InsertPair:
        return "insert-pair";
    case MoveKind::DropHead:
        return "drop-head";
    case MoveKind::AddHead:
        return "add-head";
    case MoveKind::ShuffleRight:
        return "shuffle-right";
    case MoveKind::ShuffleLeft:
        return "shuffle-left";
    case MoveKind::RelationPrefix:
        return "relation-prefix";
    case MoveKind::ExpandLetter:
        return "expand-letter";
    case MoveKind::ContractLetter:
        return "contract-letter";
    }
    return "cancel";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s)
{
    for (auto k : {MoveKind::Cancel, MoveKind::InsertPair, MoveKind::DropHead, MoveKind::AddHead,
             MoveKind::ShuffleRight, MoveKind::ShuffleLeft, MoveKind::RelationPrefix, MoveKind::ExpandLetter,
             MoveKind::ContractLetter})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

namespace {

struct CMove {
    MoveKind kind = MoveKind::Cancel;
    int position = 0;
    int generator = 0;
    int sign = 1;
    int relation = -1;
    bool forward = true;
};

// a *^s b = c
struct Fact {
    int a;
    int b;
    int s;
    int c;
};

class Rules {
public:
    explicit Rules(const QuandlePresentation& p) :
        p_(p),
        generators_(static_cast<int>(p.generators().size())),
        relations_(detail::compile_relations(p)),
        by_key_(static_cast<std::size_t>(generators_ * generators_ * 2))
    {
        for (std::size_t k = 0; k < relations_.size(); ++k)
            for (bool forward : {true, false})
                if (auto f = fact(static_cast<int>(k), forward))
                    by_key_[key(f->a, f->b, f->s)].push_back({static_cast<int>(k), forward});
    }

    const QuandlePresentation& presentation() const { return p_; }
    int generators() const { return generators_; }
    const std::vector<detail::CompiledRelation>& relations() const { return relations_; }

    // The Cayley shape y *^f z = g of relation k, if it has one.
    std::optional<std::array<int, 4>> cayley(int k) const
    {
        const auto& r = relations_[k];
        auto shaped = [](const CompiledWord& compound, const CompiledWord& bare) -> std::optional<std::array<int, 4>> {
            if (compound.tail.size() != 1 || !bare.tail.empty())
                return std::nullopt;
            return std::array<int, 4>{compound.head, compound.tail[0].generator, compound.tail[0].sign, bare.head};
        };
        if (auto c = shaped(r.lhs, r.rhs))
            return c;
        return shaped(r.rhs, r.lhs);
    }

    // forward: y *^f z = g; otherwise g *^-f z = y.
    std::optional<Fact> fact(int k, bool forward) const
    {
        auto c = cayley(k);
        if (!c)
            return std::nullopt;
        const auto [y, z, f, g] = *c;
        if (forward)
            return Fact{y, z, f, g};
        return Fact{g, z, -f, y};
    }

    const std::vector<std::pair<int, bool>>& facts_for(int a, int b, int s) const { return by_key_[key(a, b, s)]; }

    std::optional<Fact> resolve(int relation, bool forward, int a, int b, int s) const
    {
        if (relation < 0) {
            if (a != b)
                return std::nullopt;
            return Fact{a, a, s, a};
        }
        if (relation >= static_cast<int>(relations_.size()))
            return std::nullopt;
        auto f = fact(relation, forward);
        if (!f || f->a != a || f->b != b || f->s != s)
            return std::nullopt;
        return f;
    }

private:
    std::size_t key(int a, int b, int s) const
    {
        return (static_cast<std::size_t>(a) * generators_ + b) * 2 + (s > 0 ? 1 : 0);
    }

    const QuandlePresentation& p_;
    int generators_;
    std::vector<detail::CompiledRelation> relations_;
    std::vector<std::vector<std::pair<int, bool>>> by_key_;
};

std::vector<CompiledLetter> expansion(const CompiledWord& s, int sign)
{
    std::vector<CompiledLetter> out;
    for (auto it = s.tail.rbegin(); it != s.tail.rend(); ++it)
        out.push_back({it->generator, -it->sign});
    out.push_back({s.head, sign});
    out.insert(out.end(), s.tail.begin(), s.tail.end());
    return out;
}

bool has_prefix(const CompiledWord& w, const CompiledWord& prefix)
{
    if (w.head != prefix.head || w.tail.size() < prefix.tail.size())
        return false;
    return std::equal(prefix.tail.begin(), prefix.tail.end(), w.tail.begin());
}

std::optional<CompiledWord> apply(const Rules& rules, const CompiledWord& w, const CMove& m)
{
    const auto n = static_cast<int>(w.tail.size());
    const int i = m.position;
    auto it = [&](int pos) { return w.tail.begin() + pos; };
    CompiledWord out = w;

    switch (m.kind) {
    case MoveKind::Cancel:
        if (i < 0 || i + 1 >= n || w.tail[i].generator != w.tail[i + 1].generator ||
            w.tail[i].sign != -w.tail[i + 1].sign)
            return std::nullopt;
        out.tail.erase(out.tail.begin() + i, out.tail.begin() + i + 2);
        return out;
    case MoveKind::InsertPair: {
        if (i < 0 || i > n || m.generator < 0 || m.generator >= rules.generators())
            return std::nullopt;
        const int s = m.sign > 0 ? 1 : -1;
        out.tail.insert(out.tail.begin() + i, {CompiledLetter{m.generator, s}, CompiledLetter{m.generator, -s}});
        return out;
    }
    case MoveKind::DropHead:
        if (n == 0 || w.tail[0].generator != w.head)
            return std::nullopt;
        out.tail.erase(out.tail.begin());
        return out;
    case MoveKind::AddHead:
        out.tail.insert(out.tail.begin(), CompiledLetter{w.head, m.sign > 0 ? 1 : -1});
        return out;
    case MoveKind::ShuffleRight: {
        if (i < 0 || i + 1 >= n)
            return std::nullopt;
        const auto [a, e] = w.tail[i];
        const auto [b, s] = w.tail[i + 1];
        auto f = rules.resolve(m.relation, m.forward, a, b, s);
        if (!f)
            return std::nullopt;
        out.tail[i] = {b, s};
        out.tail[i + 1] = {f->c, e};
        return out;
    }
    case MoveKind::ShuffleLeft: {
        if (i < 0 || i + 1 >= n)
            return std::nullopt;
        const auto [b, s] = w.tail[i];
        const auto [c, e] = w.tail[i + 1];
        auto f = rules.resolve(m.relation, m.forward, c, b, -s);
        if (!f)
            return std::nullopt;
        out.tail[i] = {f->c, e};
        out.tail[i + 1] = {b, s};
        return out;
    }
    case MoveKind::RelationPrefix: {
        if (m.relation < 0 || m.relation >= static_cast<int>(rules.relations().size()))
            return std::nullopt;
        const auto& r = rules.relations()[m.relation];
        const CompiledWord& from = m.forward ? r.lhs : r.rhs;
        const CompiledWord& to = m.forward ? r.rhs : r.lhs;
        if (!has_prefix(w, from))
            return std::nullopt;
        CompiledWord result = to;
        result.tail.insert(result.tail.end(), it(static_cast<int>(from.tail.size())), w.tail.end());
        return result;
    }
    case MoveKind::ExpandLetter:
    case MoveKind::ContractLetter: {
        if (m.relation < 0 || m.relation >= static_cast<int>(rules.relations().size()))
            return std::nullopt;
        const auto& r = rules.relations()[m.relation];
        const CompiledWord& bare = m.forward ? r.lhs : r.rhs;
        const CompiledWord& other = m.forward ? r.rhs : r.lhs;
        if (!bare.tail.empty())
            return std::nullopt;
        if (m.kind == MoveKind::ExpandLetter) {
            if (i < 0 || i >= n || w.tail[i].generator != bare.head)
                return std::nullopt;
            const auto letters = expansion(other, w.tail[i].sign);
            out.tail.erase(out.tail.begin() + i);
            out.tail.insert(out.tail.begin() + i, letters.begin(), letters.end());
            return out;
        }
        const int span = 2 * static_cast<int>(other.tail.size()) + 1;
        if (i < 0 || i + span > n)
            return std::nullopt;
        const int sign = w.tail[i + static_cast<int>(other.tail.size())].sign;
        const auto letters = expansion(other, sign);
        if (!std::equal(letters.begin(), letters.end(), it(i)))
            return std::nullopt;
        out.tail.erase(out.tail.begin() + i, out.tail.begin() + i + span);
        out.tail.insert(out.tail.begin() + i, CompiledLetter{bare.head, sign});
        return out;
    }
    }
    return std::nullopt;
}

// The move that undoes `m`, applied to the word `m` produced from `before`.
CMove inverse(const CMove& m, const CompiledWord& before)
{
    CMove out = m;
    switch (m.kind) {
    case MoveKind::Cancel:
        out.kind = MoveKind::InsertPair;
        out.generator = before.tail[m.position].generator;
        out.sign = before.tail[m.position].sign;
        break;
    case MoveKind::InsertPair:
        out.kind = MoveKind::Cancel;
        break;
    case MoveKind::DropHead:
        out.kind = MoveKind::AddHead;
        out.sign = before.tail[0].sign;
        break;
    case MoveKind::AddHead:
        out.kind = MoveKind::DropHead;
        break;
    case MoveKind::ShuffleRight:
        out.kind = MoveKind::ShuffleLeft;
        out.forward = !m.forward;
        break;
    case MoveKind::ShuffleLeft:
        out.kind = MoveKind::ShuffleRight;
        out.forward = !m.forward;
        break;
    case MoveKind::RelationPrefix:
        out.forward = !m.forward;
        break;
    case MoveKind::ExpandLetter:
        out.kind = MoveKind::ContractLetter;
        break;
    case MoveKind::ContractLetter:
        out.kind = MoveKind::ExpandLetter;
        break;
    }
    return out;
}

template <typename Emit>
void neighbors(const Rules& rules, const CompiledWord& w, int max_len, Emit&& emit)
{
    const auto n = static_cast<int>(w.tail.size());
    const int length = n + 1;
    auto try_move = [&](const CMove& m) {
        if (auto next = apply(rules, w, m); next && static_cast<int>(next->tail.size()) + 1 <= max_len)
            emit(m, std::move(*next));
    };

    for (int i = 0; i + 1 < n; ++i)
        if (w.tail[i].generator == w.tail[i + 1].generator && w.tail[i].sign == -w.tail[i + 1].sign)
            try_move({MoveKind::Cancel, i});
    if (n > 0 && w.tail[0].generator == w.head)
        try_move({MoveKind::DropHead});

    for (int i = 0; i + 1 < n; ++i) {
        const auto [a, e] = w.tail[i];
        const auto [b, s] = w.tail[i + 1];
        if (a == b) {
            try_move({MoveKind::ShuffleRight, i, 0, 1, -1, true});
        } else {
            for (const auto& [k, forward] : rules.facts_for(a, b, s))
                try_move({MoveKind::ShuffleRight, i, 0, 1, k, forward});
            for (const auto& [k, forward] : rules.facts_for(b, a, -e))
                try_move({MoveKind::ShuffleLeft, i, 0, 1, k, forward});
        }
    }

    const int relations = static_cast<int>(rules.relations().size());
    for (int k = 0; k < relations; ++k)
        for (bool forward : {true, false}) {
            try_move({MoveKind::RelationPrefix, 0, 0, 1, k, forward});
            const auto& r = rules.relations()[k];
            const CompiledWord& bare = forward ? r.lhs : r.rhs;
            if (!bare.tail.empty())
                continue;
            for (int i = 0; i < n; ++i) {
                if (w.tail[i].generator == bare.head)
                    try_move({MoveKind::ExpandLetter, i, 0, 1, k, forward});
                try_move({MoveKind::ContractLetter, i, 0, 1, k, forward});
            }
        }

    if (length + 1 <= max_len)
        for (int s : {1, -1})
            try_move({MoveKind::AddHead, 0, 0, s});
    if (length + 2 <= max_len)
        for (int i = 0; i <= n; ++i)
            for (int g = 0; g < rules.generators(); ++g)
                for (int s : {1, -1})
                    try_move({MoveKind::InsertPair, i, g, s});
}

std::string encode(const CompiledWord& w)
{
    std::string out(1, static_cast<char>(w.head));
    for (const auto& l : w.tail)
        out.push_back(static_cast<char>(l.generator * 2 + (l.sign < 0 ? 1 : 0)));
    return out;
}

CompiledWord decode(const std::string& s)
{
    CompiledWord w{static_cast<unsigned char>(s[0]), {}};
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int c = static_cast<unsigned char>(s[i]);
        w.tail.push_back({c / 2, c % 2 ? -1 : 1});
    }
    return w;
}

Move to_public(const CMove& m, const QuandlePresentation& p)
{
    Move out{m.kind, m.position, {}, m.sign, m.relation, m.forward};
    if (m.kind == MoveKind::InsertPair)
        out.generator = p.generators()[m.generator].name;
    if (m.kind != MoveKind::InsertPair && m.kind != MoveKind::AddHead)
        out.sign = 1;
    if (m.kind != MoveKind::ShuffleRight && m.kind != MoveKind::ShuffleLeft && m.kind != MoveKind::RelationPrefix &&
        m.kind != MoveKind::ExpandLetter && m.kind != MoveKind::ContractLetter) {
        out.relation = -1;
        out.forward = true;
    }
    return out;
}

std::optional<CMove> to_compiled(const Move& m, const QuandlePresentation& p)
{
    CMove out{m.kind, m.position, 0, m.sign, m.relation, m.forward};
    if (m.kind == MoveKind::InsertPair) {
        auto g = p.index_of(m.generator);
        if (!g)
            return std::nullopt;
        out.generator = *g;
    }
    return out;
}

struct Node {
    std::string word;
    int parent;
    CMove move;
};

struct Side {
    std::unordered_map<std::string, int> index;
    std::vector<Node> nodes;
    std::vector<int> frontier;

    int add(std::string word, int parent, const CMove& move)
    {
        const int id = static_cast<int>(nodes.size());
        index.emplace(word, id);
        nodes.push_back({std::move(word), parent, move});
        frontier.push_back(id);
        return id;
    }
};

// u -> node along forward parents, then node -> v along backward parents.
Trace assemble(const Rules& rules, const Side& fwd, int f_node, const Side& bwd, int b_node)
{
    const auto& p = rules.presentation();
    std::vector<int> chain;
    for (int id = f_node; id >= 0; id = fwd.nodes[id].parent)
        chain.push_back(id);
    std::reverse(chain.begin(), chain.end());

    Trace trace{decompile(decode(fwd.nodes[chain.front()].word), p), {}};
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const Node& node = fwd.nodes[chain[k]];
        trace.steps.push_back({to_public(node.move, p), decompile(decode(node.word), p)});
    }
    for (int id = b_node; bwd.nodes[id].parent >= 0; id = bwd.nodes[id].parent) {
        const Node& node = bwd.nodes[id];
        const Node& parent = bwd.nodes[node.parent];
        const CMove back = inverse(node.move, decode(parent.word));
        trace.steps.push_back({to_public(back, p), decompile(decode(parent.word), p)});
    }
    return trace;
}

} // namespace

std::optional<QuandleWord> apply_move(const QuandlePresentation& p, const QuandleWord& w, const Move& move)
{
    Rules rules(p);
    auto m = to_compiled(move, p);
    if (!m)
        return std::nullopt;
    auto out = apply(rules, detail::compile(w, p), *m);
    if (!out)
        return std::nullopt;
    return decompile(*out, p);
}

bool replay(const QuandlePresentation& p, const Trace& trace, const QuandleWord& u, const QuandleWord& v)
{
    if (!(trace.start == u))
        return false;
    Rules rules(p);
    CompiledWord current = detail::compile(u, p);
    for (const auto& step : trace.steps) {
        auto m = to_compiled(step.move, p);
        if (!m)
            return false;
        auto next = apply(rules, current, *m);
        if (!next || !(decompile(*next, p) == step.word))
            return false;
        current = std::move(*next);
    }
    return decompile(current, p) == v;
}

std::optional<Trace> prove_equal(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    const ProofBudget& budget, ProofStats* stats)
{
    ProofStats local;
    ProofStats& s = stats ? *stats : local;
    if (p.generators().size() > 127)
        throw Error("prover supports at most 127 generators");
    const Rules rules(p);
    const CompiledWord cu = detail::compile(u, p);
    const CompiledWord cv = detail::compile(v, p);
    if (cu == cv)
        return Trace{u, {}};

    const int max_len = std::max<int>({budget.max_len, static_cast<int>(u.length()), static_cast<int>(v.length())});
    Side fwd;
    Side bwd;
    if (budget.max_nodes < 2) {
        s.exhausted = true;
        return std::nullopt;
    }
    fwd.add(encode(cu), -1, {});
    bwd.add(encode(cv), -1, {});
    s.nodes = 2;

    while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
        const bool grow_forward = fwd.frontier.size() <= bwd.frontier.size();
        Side& mine = grow_forward ? fwd : bwd;
        const Side& other = grow_forward ? bwd : fwd;
        std::vector<int> level;
        level.swap(mine.frontier);

        for (int id : level) {
            const CompiledWord w = decode(mine.nodes[id].word);
            std::optional<Trace> found;
            bool out_of_budget = false;
            neighbors(rules, w, max_len, [&](const CMove& m, CompiledWord next) {
                if (found || out_of_budget)
                    return;
                std::string key = encode(next);
                if (mine.index.contains(key))
                    return;
                if (s.nodes >= budget.max_nodes) {
                    out_of_budget = true;
                    return;
                }
                ++s.nodes;
                const int added = mine.add(key, id, m);
                if (auto hit = other.index.find(key); hit != other.index.end())
                    found = grow_forward ? assemble(rules, fwd, added, bwd, hit->second)
                                         : assemble(rules, fwd, hit->second, bwd, added);
            });
            if (found)
                return found;
            if (out_of_budget) {
                s.exhausted = true;
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

} // namespace quandle
