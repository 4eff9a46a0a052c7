#include "quandle/homomorphism.hpp"

#include "compiled.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>

namespace quandle {

using detail::CompiledRelation;
using detail::CompiledWord;

Assignment Homomorphism::assignment() const
{
    Assignment out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out.emplace(source.generators()[i].name, values[i]);
    return out;
}

bool is_homomorphism(const QuandlePresentation& p, const FiniteQuandle& f, std::span<const int> values)
{
    if (values.size() != p.generators().size())
        return false;
    for (int v : values)
        if (v < 0 || v >= f.order())
            return false;
    for (const auto& r : detail::compile_relations(p))
        if (detail::evaluate(r.lhs, f, values) != detail::evaluate(r.rhs, f, values))
            return false;
    return true;
}

namespace {

// Depth-first search over generator values in declaration order; a relation
// is checked as soon as its last generator is assigned.
class HomSearch {
public:
    HomSearch(const QuandlePresentation& p, const FiniteQuandle& f) :
        target_(f),
        size_(static_cast<int>(p.generators().size())),
        checks_(static_cast<std::size_t>(std::max(size_, 1)))
    {
        for (auto& r : detail::compile_relations(p))
            checks_[r.ready].push_back(std::move(r));
    }

    int size() const noexcept { return size_; }

    // visit(values) returns false to stop. Returns false if stopped early.
    // `budget` counts assignments of single generators.
    template <typename Visit>
    bool run(std::vector<int>& values, int depth, std::uint64_t& steps, std::uint64_t budget, Visit&& visit) const
    {
        if (depth == size_)
            return visit(values);
        for (int x = 0; x < target_.order(); ++x) {
            if (++steps > budget)
                return false;
            values[depth] = x;
            if (!consistent(values, depth))
                continue;
            if (!run(values, depth + 1, steps, budget, visit))
                return false;
        }
        return true;
    }

    bool consistent(std::span<const int> values, int depth) const
    {
        for (const auto& r : checks_[depth])
            if (detail::evaluate(r.lhs, target_, values) != detail::evaluate(r.rhs, target_, values))
                return false;
        return true;
    }

private:
    const FiniteQuandle& target_;
    int size_;
    std::vector<std::vector<CompiledRelation>> checks_;
};

constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

// Runs `task(first_value)` for every value of the first generator, in
// parallel batches when jobs > 1, and returns the results in value order.
template <typename Task>
auto per_first_value(int values, int jobs, Task task)
{
    using Result = decltype(task(0));
    std::vector<Result> out(static_cast<std::size_t>(values));
    if (jobs <= 1) {
        for (int v = 0; v < values; ++v)
            out[v] = task(v);
        return out;
    }
    for (int start = 0; start < values; start += jobs) {
        std::vector<std::future<Result>> batch;
        for (int v = start; v < std::min(values, start + jobs); ++v)
            batch.push_back(std::async(std::launch::async, task, v));
        for (int i = 0; i < static_cast<int>(batch.size()); ++i)
            out[start + i] = batch[i].get();
    }
    return out;
}

} // namespace

std::vector<Homomorphism> enumerate_homs(const QuandlePresentation& p, const FiniteQuandle& f, int jobs)
{
    HomSearch search(p, f);
    if (search.size() == 0)
        return {Homomorphism{p, f, {}}};

    auto chunks = per_first_value(f.order(), jobs, [&](int first) {
        std::vector<std::vector<int>> found;
        std::vector<int> values(static_cast<std::size_t>(search.size()));
        values[0] = first;
        if (!search.consistent(values, 0))
            return found;
        std::uint64_t steps = 0;
        search.run(values, 1, steps, unlimited, [&](const std::vector<int>& v) {
            found.push_back(v);
            return true;
        });
        return found;
    });

    std::vector<Homomorphism> out;
    for (auto& chunk : chunks)
        for (auto& values : chunk)
            out.push_back(Homomorphism{p, f, std::move(values)});
    return out;
}

std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& f, int jobs)
{
    HomSearch search(p, f);
    if (search.size() == 0)
        return 1;
    auto counts = per_first_value(f.order(), jobs, [&](int first) {
        std::uint64_t count = 0;
        std::vector<int> values(static_cast<std::size_t>(search.size()));
        values[0] = first;
        if (!search.consistent(values, 0))
            return count;
        std::uint64_t steps = 0;
        search.run(values, 1, steps, unlimited, [&](const std::vector<int>&) {
            ++count;
            return true;
        });
        return count;
    });
    std::uint64_t total = 0;
    for (auto c : counts)
        total += c;
    return total;
}

std::string to_string(Heuristic h)
{
    switch (h) {
    case Heuristic::FactorProjection:
        return "factor-projection";
    case Heuristic::FreeProjection:
        return "free-projection";
    case Heuristic::EtaConjugacy:
        return "eta-conjugacy";
    case Heuristic::Catalog:
        return "catalog";
    }
    return "catalog";
}

bool replay(const SeparationWitness& w, const QuandleWord& u, const QuandleWord& v)
{
    if (!is_homomorphism(w.hom.source, w.hom.target, w.hom.values))
        return false;
    const auto assign = w.hom.assignment();
    const int left = evaluate(u, w.hom.target, assign);
    const int right = evaluate(v, w.hom.target, assign);
    return left == w.left_image && right == w.right_image && left != right;
}

namespace {

SeparationWitness make_witness(const QuandlePresentation& p, const FiniteQuandle& f, std::vector<int> values,
    const QuandleWord& u, const QuandleWord& v, Heuristic h)
{
    SeparationWitness w{Homomorphism{p, f, std::move(values)}, 0, 0, h};
    const auto assign = w.hom.assignment();
    w.left_image = evaluate(u, f, assign);
    w.right_image = evaluate(v, f, assign);
    return w;
}

struct MemberResult {
    std::optional<std::vector<int>> values;
    // assignments tried up to and including the witness, or in total
    std::uint64_t steps = 0;
    bool hit_budget = false;
};

MemberResult sweep_member(const QuandlePresentation& p, const FiniteQuandle& f, const CompiledWord& u,
    const CompiledWord& v, std::uint64_t budget)
{
    MemberResult result;
    HomSearch search(p, f);
    std::vector<int> values(static_cast<std::size_t>(search.size()));
    const bool finished = search.run(values, 0, result.steps, budget, [&](const std::vector<int>& vals) {
        if (detail::evaluate(u, f, vals) == detail::evaluate(v, f, vals))
            return true;
        result.values = vals;
        return false;
    });
    result.hit_budget = !finished && !result.values;
    return result;
}

std::optional<int> single_factor(const QuandlePresentation& p, const QuandleWord& w)
{
    const int factor = p.factor_of(w.head);
    for (const auto& l : w.tail)
        if (p.factor_of(l.generator) != factor)
            return std::nullopt;
    return factor;
}

QuandleWord project_to_factors(const QuandlePresentation& p, const QuandleWord& w)
{
    auto name = [&](const std::string& g) { return "f" + std::to_string(p.factor_of(g)); };
    QuandleWord out(name(w.head));
    for (const auto& l : w.tail)
        out.tail.push_back({name(l.generator), l.sign});
    return out;
}

} // namespace

std::optional<SeparationWitness> catalog_sweep(const QuandlePresentation& p, const QuandleWord& u,
    const QuandleWord& v, std::span<const FiniteQuandle> catalog, const SeparationBudget& budget,
    SeparationStats* stats)
{
    SeparationStats local;
    SeparationStats& s = stats ? *stats : local;
    const CompiledWord cu = detail::compile(u, p);
    const CompiledWord cv = detail::compile(v, p);

    std::vector<const FiniteQuandle*> members;
    for (const auto& f : catalog)
        if (f.order() <= budget.catalog_order)
            members.push_back(&f);

    const std::uint64_t remaining =
        budget.max_assignments > s.assignments_tried ? budget.max_assignments - s.assignments_tried : 0;
    std::vector<MemberResult> results(members.size());
    std::size_t computed = 0;
    if (budget.jobs <= 1) {
        std::uint64_t left = remaining;
        while (computed < members.size()) {
            const auto& r = results[computed] = sweep_member(p, *members[computed], cu, cv, left);
            ++computed;
            if (r.values || r.hit_budget)
                break;
            left -= std::min(left, r.steps);
        }
    } else {
        const auto jobs = static_cast<std::size_t>(budget.jobs);
        bool done = false;
        while (computed < members.size() && !done) {
            const std::size_t stop = std::min(members.size(), computed + jobs);
            std::vector<std::future<MemberResult>> batch;
            for (std::size_t i = computed; i < stop; ++i)
                batch.push_back(std::async(std::launch::async, sweep_member, std::cref(p), std::cref(*members[i]),
                    std::cref(cu), std::cref(cv), remaining));
            for (auto& f : batch) {
                const auto& r = results[computed++] = f.get();
                done = done || r.values || r.hit_budget;
            }
        }
    }

    // replay the per-member results in catalog order against the shared
    // budget so the outcome does not depend on the worker count
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < computed; ++i) {
        const auto& r = results[i];
        if (r.hit_budget || used + r.steps > remaining) {
            s.assignments_tried += remaining;
            s.exhausted = true;
            return std::nullopt;
        }
        used += r.steps;
        s.catalog_order_reached = std::max(s.catalog_order_reached, members[i]->order());
        if (r.values) {
            s.assignments_tried += used;
            return make_witness(p, *members[i], *r.values, u, v, Heuristic::Catalog);
        }
    }
    s.assignments_tried += used;
    return std::nullopt;
}

std::optional<SeparationWitness> separate(const QuandlePresentation& p, const QuandleWord& u, const QuandleWord& v,
    std::span<const FiniteQuandle> catalog, const SeparationBudget& budget, SeparationStats* stats)
{
    SeparationStats local;
    SeparationStats& s = stats ? *stats : local;
    p.check_word(u);
    p.check_word(v);
    const QuandleWord ru = reduce(u);
    const QuandleWord rv = reduce(v);
    const int factors = p.factor_count();

    if (factors >= 2) {
        const auto fu = single_factor(p, ru);
        const auto fv = single_factor(p, rv);
        if (fu && fv && *fu != *fv) {
            std::vector<int> values;
            for (std::size_t g = 0; g < p.generators().size(); ++g)
                values.push_back(p.factor_of(static_cast<int>(g)) == *fu ? 0 : 1);
            return make_witness(p, trivial(2), std::move(values), u, v, Heuristic::FactorProjection);
        }

        const QuandleWord pu = project_to_factors(p, ru);
        const QuandleWord pv = project_to_factors(p, rv);
        if (!free_quandle_equal(pu, pv)) {
            std::vector<std::string> names;
            for (int i = 0; i < factors; ++i)
                names.push_back("f" + std::to_string(i));
            const auto free = free_quandle(names);
            if (auto pushed = catalog_sweep(free, pu, pv, catalog, budget, &s)) {
                std::vector<int> values;
                for (std::size_t g = 0; g < p.generators().size(); ++g)
                    values.push_back(pushed->hom.values[p.factor_of(static_cast<int>(g))]);
                return make_witness(p, pushed->hom.target, std::move(values), u, v, Heuristic::FreeProjection);
            }
        }

        if (p.factor_of(ru.head) != p.factor_of(rv.head)) {
            std::vector<int> values;
            for (std::size_t g = 0; g < p.generators().size(); ++g)
                values.push_back(p.factor_of(static_cast<int>(g)));
            return make_witness(p, trivial(factors), std::move(values), u, v, Heuristic::EtaConjugacy);
        }
    }

    return catalog_sweep(p, u, v, catalog, budget, &s);
}

std::pair<QuandleWord, QuandleWord> second_axiom_shift(const QuandleWord& u, const QuandleWord& v)
{
    QuandleWord y = u;
    y.reduced = false;
    for (auto it = v.tail.rbegin(); it != v.tail.rend(); ++it)
        y.tail.push_back({it->generator, -it->sign});
    return {std::move(y), QuandleWord(v.head)};
}

CosetQuandleHom quotient_coset_hom(const FiniteGroup& g, std::span<const CosetPart> parts, const FiniteGroup& f,
    std::span<const int> phi)
{
    if (auto failure = find_homomorphism_failure(g, f, phi))
        throw NotHomomorphism(failure->first, failure->second);

    std::vector<CosetPart> image_parts;
    for (const auto& part : parts) {
        std::set<int> image;
        for (int h : part.subgroup)
            image.insert(phi[h]);
        image_parts.push_back({{image.begin(), image.end()}, phi[part.z]});
    }

    CosetQuandleHom out{disjoint_union_coset(g, parts), disjoint_union_coset(f, image_parts), {}};
    const int size = out.source.quandle.order();
    for (int a = 0; a < size; ++a) {
        const int part = out.source.part[a];
        out.map.push_back(out.target.element_of[part][phi[out.source.representative[a]]]);
    }
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b)
            if (out.map[out.source.quandle.op(a, b)] != out.target.quandle.op(out.map[a], out.map[b]))
                throw NotHomomorphism(a, b);
    return out;
}

} // namespace quandle
