#include "quandle/finite_quandle.hpp"

#include <algorithm>
#include <numeric>

namespace quandle {

namespace {

void check_shape(const Table& table)
{
    const std::size_t n = table.size();
    if (n == 0)
        throw InvalidTable("a quandle must have at least one element");
    for (const auto& row : table) {
        if (row.size() != n)
            throw InvalidTable("Cayley table is not square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InvalidTable("Cayley table entry " + std::to_string(v) + " out of range");
    }
}

} // namespace

std::optional<AxiomViolation> find_axiom_violation(const Table& table)
{
    check_shape(table);
    const int n = static_cast<int>(table.size());
    auto at = [&](int x, int y) { return table[x][y]; };

    for (int x = 0; x < n; ++x)
        if (at(x, x) != x)
            return AxiomViolation(1, {x, x});

    // seen[y][v] is set once value v has appeared in column y
    std::vector<char> seen(table.size() * table.size(), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            char& flag = seen[static_cast<std::size_t>(y) * table.size() + at(x, y)];
            if (flag)
                return AxiomViolation(2, {x, y});
            flag = 1;
        }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (at(at(x, y), z) != at(at(x, z), at(y, z)))
                    return AxiomViolation(3, {x, y, z});
    return std::nullopt;
}

FiniteQuandle FiniteQuandle::validate(const Table& table, std::string label)
{
    const int n = static_cast<int>(table.size());
    if (auto violation = find_axiom_violation(table))
        throw *violation;

    FiniteQuandle q;
    q.order_ = n;
    q.label_ = std::move(label);
    q.table_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table)
        q.table_.insert(q.table_.end(), row.begin(), row.end());
    q.dual_.resize(q.table_.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            q.dual_[q.index(q.op(x, y), y)] = x;
    return q;
}

FiniteQuandle FiniteQuandle::with_label(std::string label) const
{
    FiniteQuandle q = *this;
    q.label_ = std::move(label);
    return q;
}

Table FiniteQuandle::table() const
{
    Table out(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x)
        out[x].assign(table_.begin() + static_cast<std::ptrdiff_t>(x) * order_,
            table_.begin() + static_cast<std::ptrdiff_t>(x + 1) * order_);
    return out;
}

Permutation FiniteQuandle::column(int y) const
{
    Permutation p(static_cast<std::size_t>(order_));
    for (int x = 0; x < order_; ++x)
        p[x] = op(x, y);
    return p;
}

FiniteQuandle trivial(int n)
{
    if (n < 1)
        throw InvalidTable("trivial quandle order must be positive");
    Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int x = 0; x < n; ++x)
        std::fill(t[x].begin(), t[x].end(), x);
    return FiniteQuandle::validate(t, "T" + std::to_string(n));
}

FiniteQuandle dihedral(int n)
{
    if (n < 1)
        throw InvalidTable("dihedral quandle order must be positive");
    Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = ((2 * j - i) % n + n) % n;
    return FiniteQuandle::validate(t, "R" + std::to_string(n));
}

FiniteQuandle conj(const FiniteGroup& g)
{
    const int n = g.order();
    Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = g.mul(g.mul(g.inv(b), a), b);
    return FiniteQuandle::validate(t, g.label().empty() ? std::string("Conj") : "Conj(" + g.label() + ")");
}

CosetQuandle coset_quandle(const FiniteGroup& g, const CosetPart& part)
{
    return disjoint_union_coset(g, std::span<const CosetPart>(&part, 1));
}

CosetQuandle disjoint_union_coset(const FiniteGroup& g, std::span<const CosetPart> parts)
{
    if (parts.empty())
        throw InvalidTable("coset construction needs at least one part");
    const int n = g.order();

    CosetQuandle out{FiniteQuandle::validate({{0}}), {}, {}, {}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& part = parts[i];
        if (part.z < 0 || part.z >= n)
            throw InvalidGroup("coset element z out of range");
        if (!g.is_subgroup(part.subgroup))
            throw NotSubgroup("part " + std::to_string(i) + " is not a subgroup");
        for (int h : part.subgroup)
            if (!g.commutes(h, part.z))
                throw NotCentralizing(static_cast<int>(i), h);

        std::vector<int> element_of(static_cast<std::size_t>(n), -1);
        for (int x = 0; x < n; ++x) {
            if (element_of[x] >= 0)
                continue;
            // x is the least element of its coset since cosets are visited in order
            const int id = static_cast<int>(out.part.size());
            out.part.push_back(static_cast<int>(i));
            out.representative.push_back(x);
            for (int h : part.subgroup)
                element_of[g.mul(h, x)] = id;
        }
        out.element_of.push_back(std::move(element_of));
    }

    const int size = static_cast<int>(out.part.size());
    Table t(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
    for (int a = 0; a < size; ++a) {
        const int i = out.part[a];
        const int x = out.representative[a];
        const int zi_inv = g.inv(parts[i].z);
        for (int b = 0; b < size; ++b) {
            const int j = out.part[b];
            const int y = out.representative[b];
            int w = g.mul(zi_inv, x);
            w = g.mul(w, g.inv(y));
            w = g.mul(w, parts[j].z);
            w = g.mul(w, y);
            t[a][b] = out.element_of[i][w];
        }
    }
    out.quandle = FiniteQuandle::validate(t);
    return out;
}

PermutationGroup inner_group(const FiniteQuandle& q)
{
    std::vector<Permutation> gens;
    gens.reserve(static_cast<std::size_t>(q.order()));
    for (int y = 0; y < q.order(); ++y)
        gens.push_back(q.column(y));
    return PermutationGroup(q.order(), std::move(gens));
}

bool is_automorphism(const FiniteQuandle& q, const Permutation& p)
{
    if (static_cast<int>(p.size()) != q.order())
        return false;
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y)
            if (p[q.op(x, y)] != q.op(p[x], p[y]))
                return false;
    return true;
}

namespace {

bool extend_isomorphism(const FiniteQuandle& a, const FiniteQuandle& b, Permutation& map, std::vector<char>& used,
    int next)
{
    const int n = a.order();
    if (next == n)
        return true;
    for (int image = 0; image < n; ++image) {
        if (used[image])
            continue;
        map[next] = image;
        bool consistent = true;
        for (int x = 0; x <= next && consistent; ++x)
            for (int y = 0; y <= next && consistent; ++y) {
                const int product = a.op(x, y);
                if (x != next && y != next && product != next)
                    continue;
                if (product <= next && map[product] != b.op(map[x], map[y]))
                    consistent = false;
            }
        if (!consistent)
            continue;
        used[image] = 1;
        if (extend_isomorphism(a, b, map, used, next + 1))
            return true;
        used[image] = 0;
    }
    map[next] = -1;
    return false;
}

} // namespace

std::optional<Permutation> is_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b)
{
    if (a.order() != b.order())
        return std::nullopt;
    Permutation map(static_cast<std::size_t>(a.order()), -1);
    std::vector<char> used(static_cast<std::size_t>(a.order()), 0);
    if (extend_isomorphism(a, b, map, used, 0))
        return map;
    return std::nullopt;
}

FiniteQuandle canonical_form(const FiniteQuandle& q)
{
    const int n = q.order();
    // relabel[old] = new; table'[new x][new y] = relabel[table[old x][old y]]
    Permutation old_of = identity_permutation(n);
    Permutation relabel(static_cast<std::size_t>(n));
    std::vector<int> best = q.flat_table();
    std::vector<int> candidate(best.size());
    do {
        for (int i = 0; i < n; ++i)
            relabel[old_of[i]] = i;
        bool smaller = false;
        bool abandoned = false;
        for (int x = 0; x < n && !abandoned; ++x)
            for (int y = 0; y < n; ++y) {
                const std::size_t k = static_cast<std::size_t>(x) * n + y;
                candidate[k] = relabel[q.op(old_of[x], old_of[y])];
                if (!smaller) {
                    if (candidate[k] > best[k]) {
                        abandoned = true;
                        break;
                    }
                    if (candidate[k] < best[k])
                        smaller = true;
                }
            }
        if (smaller && !abandoned)
            best = candidate;
    } while (std::next_permutation(old_of.begin(), old_of.end()));

    Table t(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        t[x].assign(best.begin() + static_cast<std::ptrdiff_t>(x) * n, best.begin() + static_cast<std::ptrdiff_t>(x + 1) * n);
    return FiniteQuandle::validate(t, q.label());
}

bool canonical_less(const FiniteQuandle& a, const FiniteQuandle& b)
{
    if (a.order() != b.order())
        return a.order() < b.order();
    return a.flat_table() < b.flat_table();
}

} // namespace quandle
