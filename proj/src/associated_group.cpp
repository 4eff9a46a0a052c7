#include "quandle/associated_group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace quandle {

GroupPresentation associated_group(const QuandlePresentation& p)
{
    GroupPresentation out;
    out.generators = p.generator_names();
    for (const auto& r : p.relations())
        out.relators.push_back(eta(r.lhs) * eta(r.rhs).inverse());
    return out;
}

GroupPresentation canonical(const GroupPresentation& g)
{
    GroupPresentation out = g;
    std::sort(out.generators.begin(), out.generators.end());
    std::sort(out.relators.begin(), out.relators.end());
    return out;
}

bool as_free_product_check(const QuandlePresentation& left, const QuandlePresentation& right)
{
    const auto combined = canonical(associated_group(free_product(left, right)));

    const auto renaming = rename_apart(left, right);
    auto rename_letter = [&](const std::string& name) {
        for (const auto& [from, to] : renaming)
            if (from == name)
                return to;
        return name;
    };

    GroupPresentation separate = associated_group(left);
    const GroupPresentation right_group = associated_group(right);
    for (const auto& g : right_group.generators)
        separate.generators.push_back(rename_letter(g));
    for (const auto& r : right_group.relators) {
        std::vector<Letter> letters;
        for (const auto& l : r.letters())
            letters.push_back({rename_letter(l.generator), l.sign});
        separate.relators.emplace_back(std::move(letters));
    }
    return combined == canonical(separate);
}

namespace {

int element_of(const FiniteQuandle& q, const std::string& name)
{
    int value = -1;
    const auto* end = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(name.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0 || value >= q.order())
        throw UnknownElement(name);
    return value;
}

} // namespace

int act(const FiniteQuandle& q, int x, const GroupWord& w)
{
    if (x < 0 || x >= q.order())
        throw UnknownElement(std::to_string(x));
    for (const auto& l : w.letters())
        x = q.act(x, element_of(q, l.generator), l.sign);
    return x;
}

PermutationGroup psi_image(const FiniteQuandle& q)
{
    return inner_group(q);
}

namespace {

int find_root(std::vector<int>& parent, int x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

int count_classes(std::vector<int>& parent)
{
    int classes = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
        if (find_root(parent, static_cast<int>(i)) == static_cast<int>(i))
            ++classes;
    return classes;
}

} // namespace

int abelianization_rank(const QuandlePresentation& p)
{
    std::vector<int> parent(p.generators().size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& r : p.relations()) {
        const int a = find_root(parent, *p.index_of(r.lhs.head));
        const int b = find_root(parent, *p.index_of(r.rhs.head));
        parent[std::max(a, b)] = std::min(a, b);
    }
    return count_classes(parent);
}

int abelianization_rank(const FiniteQuandle& q)
{
    std::vector<int> parent(static_cast<std::size_t>(q.order()));
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < q.order(); ++x)
        for (int y = 0; y < q.order(); ++y) {
            const int a = find_root(parent, x);
            const int b = find_root(parent, q.op(x, y));
            parent[std::max(a, b)] = std::min(a, b);
        }
    return count_classes(parent);
}

} // namespace quandle
