#include "quandle/json_io.hpp"
#include "quandle/link.hpp"
#include "quandle/word_problem.hpp"

#include <doctest.h>

#include <random>

using namespace quandle;

namespace {

const std::vector<FiniteQuandle>& catalog()
{
    static const auto cat = quandle_catalog(6);
    return cat;
}

QuandlePresentation t_r3()
{
    return free_product(free_quandle(std::vector<std::string>{"t"}), table_presentation(dihedral(3), "a"));
}

} // namespace

TEST_CASE("outcomes")
{
    CHECK(to_string(Outcome::Equal) == "equal");
    CHECK(to_string(Outcome::Distinct) == "distinct");
    CHECK(to_string(Outcome::Unknown) == "unknown");
}

TEST_CASE("free generators are distinct")
{
    const auto p = free_quandle(std::vector<std::string>{"a", "b"});
    const auto v = word_problem(p, parse_word("a"), parse_word("b"), catalog());
    CHECK(v.outcome == Outcome::Distinct);
    REQUIRE(v.witness);
    CHECK(replay(*v.witness, parse_word("a"), parse_word("b")));
}

TEST_CASE("(t*a1)*a2 and (t*a2)*a0 are equal in <t> * R3")
{
    const auto p = t_r3();
    const auto u = parse_word("t * a1 * a2");
    const auto v = parse_word("t * a2 * a0");
    const auto verdict = word_problem(p, u, v, catalog());
    CHECK(verdict.outcome == Outcome::Equal);
    REQUIRE(verdict.trace);
    CHECK(replay(p, *verdict.trace, u, v));
    CHECK(verdict.budgets.max_len == 7);
    CHECK(verdict.budgets.catalog_order == 3);
}

TEST_CASE("trefoil arcs are distinct")
{
    const auto p = wirtinger_quandle(braid_closure(parse_braid("s1 s1 s1")));
    const auto verdict = word_problem(p, parse_word("x0"), parse_word("x1"), catalog());
    CHECK(verdict.outcome == Outcome::Distinct);
    REQUIRE(verdict.witness);
    CHECK(is_isomorphic(verdict.witness->hom.target, dihedral(3)));
}

TEST_CASE("zero budgets give Unknown with a report")
{
    const auto p = free_quandle(2);
    WpBudget b;
    b.max_nodes = 0;
    b.catalog_order = 0;
    b.max_catalog_order = 0;
    b.rounds = 2;
    const auto u = parse_word("x1 * x2 * x1 / x2");
    const auto v = parse_word("x1 * x1 * x2 * x1 / x2");
    const auto verdict = word_problem(p, u, v, catalog(), b);
    CHECK(verdict.outcome == Outcome::Unknown);
    CHECK_FALSE(verdict.trace);
    CHECK_FALSE(verdict.witness);
    CHECK(verdict.budgets.rounds == 2);
    CHECK(verdict.note.find("no bound") != std::string::npos);
}

TEST_CASE("FQ2 verdicts agree with eta on all short words, never Unknown")
{
    const auto p = free_quandle(std::vector<std::string>{"a", "b"});
    std::vector<QuandleWord> words;
    for (const char* h : {"a", "b"}) {
        words.emplace_back(h);
        for (const char* g1 : {"a", "b"})
            for (int s1 : {1, -1}) {
                words.push_back(QuandleWord(h, {{g1, s1}}));
                for (const char* g2 : {"a", "b"})
                    for (int s2 : {1, -1})
                        words.push_back(QuandleWord(h, {{g1, s1}, {g2, s2}}));
            }
    }
    for (const auto& u : words)
        for (const auto& v : words) {
            const auto verdict = word_problem(p, u, v, catalog());
            REQUIRE(verdict.outcome != Outcome::Unknown);
            CHECK((verdict.outcome == Outcome::Equal) == free_quandle_equal(u, v));
        }
}

TEST_CASE("verdict JSON is identical across runs and worker counts")
{
    const auto p = free_product(wirtinger_quandle(braid_closure(parse_braid("s1 s1 s1"))), wirtinger_quandle(unknot()));
    const auto gens = p.generator_names();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, 3), sign(0, 1);
    for (int i = 0; i < 20; ++i) {
        QuandleWord u(gens[g(rng)]), v(gens[g(rng)]);
        for (int k = len(rng); k > 0; --k)
            u.tail.push_back({gens[g(rng)], sign(rng) ? 1 : -1});
        for (int k = len(rng); k > 0; --k)
            v.tail.push_back({gens[g(rng)], sign(rng) ? 1 : -1});
        WpBudget one;
        WpBudget four;
        four.jobs = 4;
        const auto a = verdict_to_json(word_problem(p, u, v, catalog(), one)).dump();
        const auto b = verdict_to_json(word_problem(p, u, v, catalog(), one)).dump();
        const auto c = verdict_to_json(word_problem(p, u, v, catalog(), four)).dump();
        CHECK(a == b);
        CHECK(a == c);
    }
}
