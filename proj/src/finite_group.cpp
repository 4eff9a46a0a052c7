#include "quandle/group.hpp"

#include "quandle/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace quandle {

Permutation identity_permutation(int degree)
{
    Permutation p(static_cast<std::size_t>(degree));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& first, const Permutation& second)
{
    Permutation out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[static_cast<std::size_t>(first[i])];
    return out;
}

Permutation inverse(const Permutation& p)
{
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return out;
}

namespace {

std::vector<Permutation> close_under_products(int degree, const std::vector<Permutation>& generators)
{
    std::set<Permutation> seen{identity_permutation(degree)};
    std::deque<Permutation> queue{identity_permutation(degree)};
    while (!queue.empty()) {
        Permutation current = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : generators) {
            Permutation next = compose(current, g);
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
        }
    }
    // finite groups: closure under products already contains inverses
    return {seen.begin(), seen.end()};
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul, std::vector<int> inv, int id,
    std::string label)
{
    const int n = static_cast<int>(mul.size());
    if (n == 0)
        throw InvalidGroup("group must be non-empty");
    if (static_cast<int>(inv.size()) != n)
        throw InvalidGroup("inverse array has wrong length");
    if (id < 0 || id >= n)
        throw InvalidGroup("identity index out of range");

    FiniteGroup g;
    g.order_ = n;
    g.id_ = id;
    g.inv_ = std::move(inv);
    g.label_ = std::move(label);
    g.mul_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidGroup("multiplication table is not square");
        for (int v : row) {
            if (v < 0 || v >= n)
                throw InvalidGroup("multiplication entry out of range");
            g.mul_.push_back(v);
        }
    }
    for (int a = 0; a < n; ++a) {
        if (g.inv_[a] < 0 || g.inv_[a] >= n)
            throw InvalidGroup("inverse entry out of range");
        if (g.mul(id, a) != a || g.mul(a, id) != a)
            throw InvalidGroup("element " + std::to_string(id) + " is not a two-sided identity");
        if (g.mul(a, g.inv_[a]) != id || g.mul(g.inv_[a], a) != id)
            throw InvalidGroup("inverse of " + std::to_string(a) + " is wrong");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw InvalidGroup("multiplication is not associative");
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1)
        throw InvalidGroup("cyclic group order must be positive");
    FiniteGroup g;
    g.order_ = n;
    g.id_ = 0;
    g.label_ = "C" + std::to_string(n);
    g.mul_.resize(static_cast<std::size_t>(n) * n);
    g.inv_.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        g.inv_[a] = (n - a) % n;
        for (int b = 0; b < n; ++b)
            g.mul_[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    }
    return g;
}

FiniteGroup FiniteGroup::symmetric(int n)
{
    if (n < 1)
        throw InvalidGroup("symmetric group degree must be positive");
    std::vector<Permutation> gens;
    if (n >= 2) {
        Permutation swap01 = identity_permutation(n);
        std::swap(swap01[0], swap01[1]);
        Permutation cycle(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            cycle[i] = (i + 1) % n;
        gens = {swap01, cycle};
    }
    return from_permutations(gens, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::from_permutations(std::span<const Permutation> generators, std::string label)
{
    int degree = generators.empty() ? 1 : static_cast<int>(generators.front().size());
    std::vector<Permutation> gens(generators.begin(), generators.end());
    for (const auto& p : gens)
        if (static_cast<int>(p.size()) != degree)
            throw InvalidGroup("generators have different degrees");

    FiniteGroup g;
    g.perms_ = close_under_products(degree, gens);
    g.order_ = static_cast<int>(g.perms_.size());
    g.label_ = std::move(label);
    std::map<Permutation, int> index;
    for (int i = 0; i < g.order_; ++i)
        index.emplace(g.perms_[i], i);
    g.id_ = index.at(identity_permutation(degree));
    g.mul_.resize(static_cast<std::size_t>(g.order_) * g.order_);
    g.inv_.resize(static_cast<std::size_t>(g.order_));
    for (int a = 0; a < g.order_; ++a) {
        g.inv_[a] = index.at(inverse(g.perms_[a]));
        for (int b = 0; b < g.order_; ++b)
            g.mul_[static_cast<std::size_t>(a) * g.order_ + b] = index.at(compose(g.perms_[a], g.perms_[b]));
    }
    return g;
}

std::optional<int> FiniteGroup::index_of(const Permutation& p) const
{
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || *it != p)
        return std::nullopt;
    return static_cast<int>(it - perms_.begin());
}

std::vector<std::vector<int>> FiniteGroup::table() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
    for (int a = 0; a < order_; ++a)
        out[a].assign(mul_.begin() + static_cast<std::ptrdiff_t>(a) * order_,
            mul_.begin() + static_cast<std::ptrdiff_t>(a + 1) * order_);
    return out;
}

std::vector<int> FiniteGroup::subgroup(std::span<const int> gens) const
{
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    std::vector<int> queue{id_};
    seen[id_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int g : gens) {
            int next = mul(queue[head], g);
            if (!seen[next]) {
                seen[next] = 1;
                queue.push_back(next);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool FiniteGroup::is_subgroup(std::span<const int> elements) const
{
    if (elements.empty())
        return false;
    std::vector<char> member(static_cast<std::size_t>(order_), 0);
    for (int h : elements) {
        if (h < 0 || h >= order_)
            return false;
        member[h] = 1;
    }
    if (!member[id_])
        return false;
    for (int a : elements) {
        if (!member[inv(a)])
            return false;
        for (int b : elements)
            if (!member[mul(a, b)])
                return false;
    }
    return true;
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != id_; x = mul(x, a))
        ++k;
    return k;
}

std::optional<std::pair<int, int>> find_homomorphism_failure(const FiniteGroup& source, const FiniteGroup& target,
    std::span<const int> phi)
{
    if (static_cast<int>(phi.size()) != source.order())
        throw InvalidGroup("group map has wrong length");
    for (int v : phi)
        if (v < 0 || v >= target.order())
            throw InvalidGroup("group map value out of range");
    for (int x = 0; x < source.order(); ++x)
        for (int y = 0; y < source.order(); ++y)
            if (phi[source.mul(x, y)] != target.mul(phi[x], phi[y]))
                return std::pair{x, y};
    return std::nullopt;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators) :
    degree_(degree),
    generators_(std::move(generators))
{
    for (const auto& g : generators_)
        if (static_cast<int>(g.size()) != degree_)
            throw InvalidGroup("generator degree mismatch");
    elements_ = close_under_products(degree_, generators_);
}

bool PermutationGroup::contains(const Permutation& p) const
{
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<std::vector<int>> PermutationGroup::orbits() const
{
    std::vector<int> orbit_of(static_cast<std::size_t>(degree_), -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < degree_; ++start) {
        if (orbit_of[start] >= 0)
            continue;
        std::vector<int> orbit{start};
        orbit_of[start] = static_cast<int>(out.size());
        for (std::size_t head = 0; head < orbit.size(); ++head)
            for (const auto& g : generators_) {
                int next = g[orbit[head]];
                if (orbit_of[next] < 0) {
                    orbit_of[next] = static_cast<int>(out.size());
                    orbit.push_back(next);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace quandle
