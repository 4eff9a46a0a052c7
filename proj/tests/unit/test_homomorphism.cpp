#include "oracles.hpp"

#include "quandle/errors.hpp"
#include "quandle/homomorphism.hpp"
#include "quandle/link.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

using namespace quandle;

namespace {

QuandlePresentation trefoil() { return wirtinger_quandle(braid_closure(parse_braid("s1 s1 s1"))); }

QuandlePresentation t_r3()
{
    return free_product(free_quandle(std::vector<std::string>{"t"}), table_presentation(dihedral(3), "a"));
}

const std::vector<FiniteQuandle>& catalog()
{
    static const auto cat = quandle_catalog(6);
    return cat;
}

std::span<const FiniteQuandle> catalog_up_to(int order)
{
    const auto& c = catalog();
    std::size_t n = 0;
    while (n < c.size() && c[n].order() <= order)
        ++n;
    return {c.data(), n};
}

QuandleWord random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_tail)
{
    std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, max_tail), sign(0, 1);
    QuandleWord w(gens[g(rng)]);
    for (int k = len(rng); k > 0; --k)
        w.tail.push_back({gens[g(rng)], sign(rng) ? 1 : -1});
    return w;
}

} // namespace

TEST_CASE("enumerated homomorphisms")
{
    const auto fq2 = free_quandle(2);
    const auto homs = enumerate_homs(fq2, trivial(2));
    CHECK(homs.size() == 4);
    for (std::size_t i = 1; i < homs.size(); ++i)
        CHECK(homs[i - 1].values < homs[i].values);

    CHECK(enumerate_homs(trefoil(), dihedral(3)).size() == 9);
    CHECK(enumerate_homs(trefoil(), trivial(2)).size() == 2);
    for (const auto& h : enumerate_homs(trefoil(), dihedral(3)))
        CHECK(is_homomorphism(h.source, h.target, h.values));
}

TEST_CASE("coloring counts match brute force over the catalog")
{
    const std::vector<QuandlePresentation> ps = {trefoil(), free_quandle(2),
        wirtinger_quandle(braid_closure(parse_braid("s1 s2^-1 s1 s2^-1"))),
        wirtinger_quandle(braid_closure(parse_braid("s1 s1"))), table_presentation(dihedral(3), "a"), t_r3()};
    for (const auto& p : ps)
        for (const auto& q : catalog_up_to(4)) {
            const auto expected = oracle::count_homs(p, q.table());
            CHECK(count_colorings(p, q) == static_cast<std::uint64_t>(expected));
            CHECK(count_colorings(p, q, 4) == static_cast<std::uint64_t>(expected));
        }
}

TEST_CASE("hom lists do not depend on the worker count")
{
    const auto p = wirtinger_quandle(braid_closure(parse_braid("s1 s2^-1 s1 s2^-1")));
    const auto one = enumerate_homs(p, dihedral(5), 1);
    const auto many = enumerate_homs(p, dihedral(5), 3);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i)
        CHECK(one[i].values == many[i].values);
}

TEST_CASE("separation ladder examples")
{
    const auto fq2 = free_quandle(std::vector<std::string>{"a", "b"});
    auto w = separate(fq2, parse_word("a"), parse_word("b"), catalog());
    REQUIRE(w);
    CHECK(w->heuristic == Heuristic::FactorProjection);
    CHECK(w->hom.target.order() == 2);
    CHECK(replay(*w, parse_word("a"), parse_word("b")));

    w = separate(fq2, parse_word("a"), parse_word("a * b"), catalog());
    REQUIRE(w);
    CHECK(replay(*w, parse_word("a"), parse_word("a * b")));
    CHECK(w->hom.target.order() == 3);
    // the dihedral assignment a -> 0, b -> 1 separates too: 0 vs 0 * 1 = 2
    CHECK(evaluate(parse_word("a * b"), dihedral(3), {{"a", 0}, {"b", 1}}) == 2);

    CHECK_FALSE(separate(t_r3(), parse_word("t * a1 * a2"), parse_word("t * a2 * a0"), catalog()));
}

TEST_CASE("trefoil arcs are separated by a 3-coloring")
{
    const auto p = trefoil();
    auto w = separate(p, parse_word("x0"), parse_word("x1"), catalog());
    REQUIRE(w);
    CHECK(replay(*w, parse_word("x0"), parse_word("x1")));
    CHECK(w->hom.target.order() == 3);
    CHECK(is_isomorphic(w->hom.target, dihedral(3)));
}

TEST_CASE("catalog sweep is the exhaustive search")
{
    const auto p = trefoil();
    auto w = catalog_sweep(p, parse_word("x0"), parse_word("x1"), catalog());
    REQUIRE(w);
    CHECK(w->heuristic == Heuristic::Catalog);
    CHECK(replay(*w, parse_word("x0"), parse_word("x1")));
    CHECK_FALSE(catalog_sweep(p, parse_word("x1 * x0"), parse_word("x2"), catalog()));
}

TEST_CASE("replay rejects forged witnesses")
{
    const auto p = trefoil();
    auto w = separate(p, parse_word("x0"), parse_word("x1"), catalog());
    REQUIRE(w);
    auto forged = *w;
    std::swap(forged.left_image, forged.right_image);
    CHECK_FALSE(replay(forged, parse_word("x0"), parse_word("x1")));
    forged = *w;
    forged.hom.values = {0, 1, 1};
    CHECK_FALSE(replay(forged, parse_word("x0"), parse_word("x1")));
    CHECK_FALSE(replay(*w, parse_word("x0"), parse_word("x0")));
}

TEST_CASE("fast heuristics never contradict the sweep, and witnesses are monotone in the order")
{
    std::mt19937_64 rng(11);
    const auto unknot_p = wirtinger_quandle(unknot());
    const auto p = free_product(trefoil(), unknot_p);
    const auto q = free_quandle(3);
    int fast = 0;
    for (int i = 0; i < 200; ++i) {
        const auto& pres = i % 2 ? p : q;
        const auto gens = pres.generator_names();
        const auto u = random_word(rng, gens, 3);
        const auto v = random_word(rng, gens, 3);
        auto w = separate(pres, u, v, catalog());
        if (!w)
            continue;
        CHECK(replay(*w, u, v));
        if (w->heuristic == Heuristic::FactorProjection || w->heuristic == Heuristic::EtaConjugacy) {
            ++fast;
            auto sweep = catalog_sweep(pres, u, v, catalog());
            CHECK(sweep.has_value());
        }
        if (w->heuristic == Heuristic::Catalog) {
            const int k = w->hom.target.order();
            for (int k2 = k; k2 <= 6; ++k2)
                CHECK(separate(pres, u, v, catalog(), {k2}).has_value());
        }
    }
    CHECK(fast > 20);
}

TEST_CASE("budget exhaustion returns nothing and says so")
{
    SeparationStats stats;
    auto w = catalog_sweep(trefoil(), parse_word("x0"), parse_word("x1"), catalog(), {6, 5, 1}, &stats);
    CHECK_FALSE(w);
    CHECK(stats.exhausted);
}

TEST_CASE("separation is deterministic across worker counts")
{
    std::mt19937_64 rng(3);
    const auto p = free_product(trefoil(), wirtinger_quandle(unknot()));
    const auto gens = p.generator_names();
    for (int i = 0; i < 40; ++i) {
        const auto u = random_word(rng, gens, 3);
        const auto v = random_word(rng, gens, 3);
        auto a = separate(p, u, v, catalog(), {6, 50'000'000, 1});
        auto b = separate(p, u, v, catalog(), {6, 50'000'000, 4});
        REQUIRE(a.has_value() == b.has_value());
        if (a) {
            CHECK(a->hom.values == b->hom.values);
            CHECK(a->hom.target == b->hom.target);
            CHECK(a->heuristic == b->heuristic);
        }
    }
}

TEST_CASE("second axiom shift")
{
    auto [y, y2] = second_axiom_shift(parse_word("a * b"), parse_word("c"));
    CHECK(y == parse_word("a * b"));
    CHECK(y2 == parse_word("c"));
    std::tie(y, y2) = second_axiom_shift(parse_word("a * b"), parse_word("c * d"));
    CHECK(y == parse_word("a * b / d"));
    CHECK(y2 == parse_word("c"));
}

TEST_CASE("second axiom shift preserves and reflects equality")
{
    const std::vector<std::string> gens = {"a", "b"};
    std::vector<QuandleWord> words;
    for (const auto& h : gens) {
        words.emplace_back(h);
        for (const auto& g1 : gens)
            for (int s1 : {1, -1}) {
                words.push_back(QuandleWord(h, {{g1, s1}}));
                for (const auto& g2 : gens)
                    for (int s2 : {1, -1})
                        words.push_back(QuandleWord(h, {{g1, s1}, {g2, s2}}));
            }
    }
    for (const auto& q : catalog_up_to(4)) {
        const auto t = q.table();
        for (const auto& u : words)
            for (const auto& v : words) {
                const auto [y, y2] = second_axiom_shift(u, v);
                oracle::for_each_assignment(gens, q.order(), [&](const auto& a) {
                    const bool same = oracle::eval(t, u, a) == oracle::eval(t, v, a);
                    if (same != (oracle::eval(t, y, a) == oracle::eval(t, y2, a)))
                        FAIL_CHECK(to_string(u) << " / " << to_string(v));
                });
            }
    }
}

TEST_CASE("coset quotient homomorphisms")
{
    SUBCASE("identity")
    {
        const auto g = FiniteGroup::symmetric(3);
        const int t = *g.index_of({1, 0, 2});
        const std::vector<CosetPart> parts = {{g.subgroup(std::vector<int>{t}), t}};
        std::vector<int> id(g.order());
        std::iota(id.begin(), id.end(), 0);
        const auto h = quotient_coset_hom(g, parts, g, id);
        for (int a = 0; a < h.source.quandle.order(); ++a)
            CHECK(h.map[a] == a);
    }
    SUBCASE("C6 onto C3 is two-to-one")
    {
        const auto c6 = FiniteGroup::cyclic(6);
        const auto c3 = FiniteGroup::cyclic(3);
        // g^k -> h^k for generators g of C6 and h of C3
        std::vector<int> phi(6, -1);
        int gen6 = -1;
        for (int a = 0; a < 6; ++a)
            if (c6.element_order(a) == 6)
                gen6 = a;
        int gen3 = -1;
        for (int a = 0; a < 3; ++a)
            if (c3.element_order(a) == 3)
                gen3 = a;
        int x = c6.identity(), y = c3.identity();
        for (int k = 0; k < 6; ++k) {
            phi[x] = y;
            x = c6.mul(x, gen6);
            y = c3.mul(y, gen3);
        }
        const std::vector<CosetPart> parts = {{{c6.identity()}, gen6}, {{c6.identity()}, c6.identity()}};
        const auto h = quotient_coset_hom(c6, parts, c3, phi);
        CHECK(h.source.quandle.order() == 12);
        CHECK(h.target.quandle.order() == 6);
        std::map<int, int> fibre;
        for (int a = 0; a < 12; ++a) {
            ++fibre[h.map[a]];
            CHECK(h.target.part[h.map[a]] == h.source.part[a]);
        }
        for (const auto& [image, size] : fibre)
            CHECK(size == 2);
        CHECK(fibre.size() == 6);
    }
    SUBCASE("a non-homomorphism is rejected")
    {
        const auto c6 = FiniteGroup::cyclic(6);
        const auto c3 = FiniteGroup::cyclic(3);
        std::vector<int> phi(6, 1);
        const std::vector<CosetPart> parts = {{{c6.identity()}, c6.identity()}};
        CHECK_THROWS_AS(quotient_coset_hom(c6, parts, c3, phi), NotHomomorphism);
    }
}
