#include "quandle/link.hpp"

#include "quandle/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>

namespace quandle {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) :
        parent_(n)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int add()
    {
        parent_.push_back(static_cast<int>(parent_.size()));
        return parent_.back();
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

// Relabels the classes of `uf` 0, 1, ... in order of their smallest member.
std::vector<int> class_labels(UnionFind& uf, int* count)
{
    std::vector<int> label(uf.size(), -1);
    std::vector<int> root_label(uf.size(), -1);
    int next = 0;
    for (int i = 0; i < uf.size(); ++i) {
        int r = uf.find(i);
        if (root_label[r] < 0)
            root_label[r] = next++;
        label[i] = root_label[r];
    }
    *count = next;
    return label;
}

std::vector<std::vector<int>> sorted_parts(std::vector<std::vector<int>> parts)
{
    for (auto& p : parts)
        std::sort(p.begin(), p.end());
    std::erase_if(parts, [](const auto& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::string arc_name(int a) { return "x" + std::to_string(a); }

} // namespace

BraidWord parse_braid(std::string_view text, std::optional<int> strands)
{
    BraidWord b;
    std::size_t i = 0;
    int top = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto number = [&](std::size_t at) {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw SyntaxError("expected a generator index", at);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw SyntaxError("generator index too large", at);
            ++i;
        }
        return static_cast<int>(v);
    };
    skip();
    while (i < text.size()) {
        const std::size_t start = i;
        if (text[i] != 's' && text[i] != 'S')
            throw SyntaxError("expected s<k>", i);
        ++i;
        int k = number(start);
        int sign = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            if (i < text.size() && text[i] == '-') {
                ++i;
                sign = -1;
            }
            else if (i < text.size() && text[i] == '+') {
                ++i;
            }
            if (number(start) != 1)
                throw SyntaxError("exponent must be 1 or -1", start);
        }
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            throw SyntaxError("unexpected character", i);
        if (k < 1)
            throw IndexOutOfRange(k, strands.value_or(k + 1));
        top = std::max(top, k);
        b.letters.push_back({k, sign});
        skip();
    }
    if (b.letters.empty())
        throw EmptyBraid();
    b.strands = strands.value_or(top + 1);
    if (b.strands < 1)
        throw IndexOutOfRange(0, b.strands);
    for (const auto& l : b.letters)
        if (l.index >= b.strands)
            throw IndexOutOfRange(l.index, b.strands);
    return b;
}

std::string to_string(const BraidWord& b)
{
    std::string out;
    for (const auto& l : b.letters) {
        if (!out.empty())
            out += ' ';
        out += "s" + std::to_string(l.index);
        if (l.sign < 0)
            out += "^-1";
    }
    return out;
}

LinkDiagram unknot() { return {1, {}, {{0}}}; }

void validate_diagram(const LinkDiagram& d)
{
    if (d.arcs < 1)
        throw InconsistentArcs("a diagram needs at least one arc");
    std::vector<int> ends(d.arcs, 0);
    std::vector<int> starts(d.arcs, 0);
    auto in_range = [&](int a) { return a >= 0 && a < d.arcs; };
    for (const auto& c : d.crossings) {
        if (!in_range(c.over) || !in_range(c.under_in) || !in_range(c.under_out))
            throw InconsistentArcs("crossing refers to a missing arc");
        if (c.sign != 1 && c.sign != -1)
            throw InconsistentArcs("crossing sign must be +1 or -1");
        ++ends[c.under_in];
        ++starts[c.under_out];
    }
    for (int a = 0; a < d.arcs; ++a) {
        if (ends[a] > 1 || starts[a] > 1)
            throw InconsistentArcs("arc " + std::to_string(a) + " passes under more than once at one end");
        if (ends[a] != starts[a])
            throw InconsistentArcs("arc " + std::to_string(a) + " is not closed up");
    }

    std::vector<int> component(d.arcs, -1);
    for (std::size_t i = 0; i < d.components.size(); ++i)
        for (int a : d.components[i]) {
            if (!in_range(a) || component[a] >= 0)
                throw InconsistentArcs("components do not partition the arcs");
            component[a] = static_cast<int>(i);
        }
    if (std::find(component.begin(), component.end(), -1) != component.end())
        throw InconsistentArcs("components do not partition the arcs");

    UnionFind uf(d.arcs);
    for (const auto& c : d.crossings)
        uf.unite(c.under_in, c.under_out);
    for (int a = 0; a < d.arcs; ++a)
        for (int b = a + 1; b < d.arcs; ++b)
            if ((uf.find(a) == uf.find(b)) != (component[a] == component[b]))
                throw InconsistentArcs("components disagree with strand continuation");
}

LinkDiagram braid_closure(const BraidWord& b)
{
    const int n = b.strands;
    if (n < 1)
        throw IndexOutOfRange(0, n);
    for (const auto& l : b.letters)
        if (l.index < 1 || l.index >= n)
            throw IndexOutOfRange(l.index, n);

    UnionFind arcs(n);
    std::vector<int> at(n);      // arc currently at each position
    std::vector<int> strand(n);  // starting position of the strand there
    std::iota(at.begin(), at.end(), 0);
    std::iota(strand.begin(), strand.end(), 0);
    std::vector<Crossing> raw;
    for (const auto& l : b.letters) {
        const int left = l.index - 1;
        const int right = l.index;
        // s_k: the left strand goes over; s_k^-1: the right one does.
        const int over_pos = l.sign > 0 ? left : right;
        const int under_pos = l.sign > 0 ? right : left;
        const int out = arcs.add();
        raw.push_back({at[over_pos], at[under_pos], out, l.sign});
        at[under_pos] = out;
        std::swap(at[left], at[right]);
        std::swap(strand[left], strand[right]);
    }
    for (int p = 0; p < n; ++p)
        arcs.unite(at[p], p);

    LinkDiagram d;
    const auto label = class_labels(arcs, &d.arcs);
    for (const auto& c : raw)
        d.crossings.push_back({label[c.over], label[c.under_in], label[c.under_out], c.sign});

    // The strand starting at p ends at position q where strand[q] == p; the
    // closure continues it at the top of q.
    std::vector<int> perm(n);
    for (int q = 0; q < n; ++q)
        perm[strand[q]] = q;
    UnionFind cycles(n);
    for (int p = 0; p < n; ++p)
        cycles.unite(p, perm[p]);
    int count = 0;
    const auto cycle = class_labels(cycles, &count);

    // Every arc contains or continues some top arc's strand; map arcs to
    // strands by walking the crossings once more.
    std::vector<int> arc_strand(d.arcs, -1);
    std::vector<int> pos_strand(n);
    std::iota(pos_strand.begin(), pos_strand.end(), 0);
    std::vector<int> pos_arc(n);
    std::iota(pos_arc.begin(), pos_arc.end(), 0);
    for (int p = 0; p < n; ++p)
        arc_strand[label[p]] = p;
    int next = n;
    for (const auto& l : b.letters) {
        const int left = l.index - 1;
        const int right = l.index;
        const int under_pos = l.sign > 0 ? right : left;
        arc_strand[label[next]] = pos_strand[under_pos];
        ++next;
        std::swap(pos_strand[left], pos_strand[right]);
    }
    std::vector<std::vector<int>> parts(count);
    for (int a = 0; a < d.arcs; ++a)
        parts[cycle[arc_strand[a]]].push_back(a);
    d.components = sorted_parts(std::move(parts));
    validate_diagram(d);
    return d;
}

LinkDiagram parse_pd(std::string_view text, std::string* warning)
{
    std::vector<std::array<long, 4>> tuples;
    std::vector<std::size_t> positions;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto expect = [&](char c) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size() || text[i] != c)
            throw SyntaxError(std::string("expected '") + c + "'", i);
        ++i;
    };
    auto number = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw SyntaxError("expected an edge label", i);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000'000)
                throw SyntaxError("edge label too large", i);
            ++i;
        }
        return v;
    };

    skip();
    while (i < text.size()) {
        positions.push_back(i);
        if (text[i] != 'X')
            throw SyntaxError("expected X(a,b,c,d)", i);
        ++i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i >= text.size() || (text[i] != '(' && text[i] != '['))
            throw SyntaxError("expected '(' or '['", i);
        const char close = text[i] == '(' ? ')' : ']';
        ++i;
        std::array<long, 4> t{};
        for (int k = 0; k < 4; ++k) {
            if (k > 0)
                expect(',');
            t[k] = number();
        }
        expect(close);
        tuples.push_back(t);
        skip();
    }

    if (tuples.empty()) {
        if (warning)
            *warning = "empty PD code read as the unknot";
        return unknot();
    }

    std::map<long, int> edge;
    std::map<long, int> uses;
    for (const auto& t : tuples)
        for (long label : t) {
            edge.emplace(label, static_cast<int>(edge.size()));
            ++uses[label];
        }
    for (const auto& [label, n] : uses)
        if (n != 2)
            throw InconsistentArcs("edge label " + std::to_string(label) + " appears " + std::to_string(n) +
                                   " times; each must appear exactly twice");

    const int edges = static_cast<int>(edge.size());
    UnionFind arcs(edges);
    UnionFind strands(edges);
    for (const auto& t : tuples) {
        arcs.unite(edge[t[1]], edge[t[3]]);
        strands.unite(edge[t[1]], edge[t[3]]);
        strands.unite(edge[t[0]], edge[t[2]]);
    }
    LinkDiagram d;
    const auto label = class_labels(arcs, &d.arcs);
    for (std::size_t k = 0; k < tuples.size(); ++k) {
        const auto& t = tuples[k];
        const long j = t[1];
        const long l = t[3];
        int sign = 0;
        if (j - l == 1 || l - j > 1)
            sign = 1;
        else if (l - j == 1 || j - l > 1)
            sign = -1;
        else
            throw InconsistentArcs("cannot orient the over strand of crossing " + std::to_string(k + 1));
        d.crossings.push_back({label[edge[t[1]]], label[edge[t[0]]], label[edge[t[2]]], sign});
    }
    int count = 0;
    const auto comp = class_labels(strands, &count);
    std::vector<std::vector<int>> parts(count);
    std::vector<bool> placed(d.arcs, false);
    for (int e = 0; e < edges; ++e)
        if (!placed[label[e]]) {
            placed[label[e]] = true;
            parts[comp[e]].push_back(label[e]);
        }
    d.components = sorted_parts(std::move(parts));
    validate_diagram(d);
    return d;
}

LinkDiagram mirror(const LinkDiagram& d)
{
    LinkDiagram m = d;
    for (auto& c : m.crossings)
        c.sign = -c.sign;
    return m;
}

QuandlePresentation wirtinger_quandle(const LinkDiagram& d)
{
    validate_diagram(d);
    std::vector<GeneratorSymbol> gens;
    for (int a = 0; a < d.arcs; ++a)
        gens.push_back({arc_name(a), std::nullopt});
    std::vector<Relation> rels;
    for (const auto& c : d.crossings)
        rels.push_back({QuandleWord(arc_name(c.under_in), {{arc_name(c.over), c.sign}}),
            QuandleWord(arc_name(c.under_out))});
    return {std::move(gens), std::move(rels)};
}

GroupPresentation link_group(const LinkDiagram& d) { return associated_group(wirtinger_quandle(d)); }

QuandlePresentation split_union(std::span<const LinkDiagram> diagrams)
{
    QuandlePresentation out;
    for (const auto& d : diagrams)
        out = free_product(out, wirtinger_quandle(d));
    return out;
}

} // namespace quandle
