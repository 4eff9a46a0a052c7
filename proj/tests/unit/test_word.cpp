#include "oracles.hpp"

#include "quandle/errors.hpp"
#include "quandle/word.hpp"

#include <doctest.h>

#include <random>

using namespace quandle;

namespace {

std::vector<Term> terms_up_to_depth(const std::vector<std::string>& gens, int depth)
{
    std::vector<Term> out;
    for (const auto& g : gens)
        out.push_back(Term::generator(g));
    for (int d = 1; d <= depth; ++d) {
        std::vector<Term> next;
        for (const auto& g : gens)
            next.push_back(Term::generator(g));
        for (const auto& l : out)
            for (const auto& r : out)
                for (int s : {1, -1})
                    next.push_back(Term::apply(l, s, r));
        out = std::move(next);
    }
    return out;
}

// Every word with a head and up to `tail` letters over `gens`.
std::vector<QuandleWord> words_up_to(const std::vector<std::string>& gens, int tail)
{
    std::vector<QuandleWord> out;
    for (const auto& h : gens)
        out.emplace_back(h);
    std::size_t begin = 0;
    for (int k = 1; k <= tail; ++k) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& g : gens)
                for (int s : {1, -1}) {
                    QuandleWord w = out[i];
                    w.tail.push_back({g, s});
                    out.push_back(w);
                }
        begin = end;
    }
    return out;
}

} // namespace

TEST_CASE("parsing left-normed words")
{
    auto w = parse_word("a * b / c");
    CHECK(w.head == "a");
    CHECK(w.tail == std::vector<Letter>{{"b", 1}, {"c", -1}});
    CHECK(parse_word("a").tail.empty());
    CHECK(parse_word("(a*b)*c") == parse_word("a*b*c"));
    CHECK(parse_word("  x1*x2 ") == QuandleWord("x1", {{"x2", 1}}));
    CHECK(parse_word("a#1 * b_2").head == "a#1");
}

TEST_CASE("parenthesized right operands are expanded")
{
    auto w = parse_word("t * (a1 * a2)");
    CHECK(w.head == "t");
    CHECK(w.tail == std::vector<Letter>{{"a2", -1}, {"a1", 1}, {"a2", 1}});
    const auto r3 = dihedral(3).table();
    oracle::for_each_assignment({"t", "a1", "a2"}, 3, [&](const auto& a) {
        CHECK(oracle::eval(r3, w, a) == oracle::eval(r3, parse_term("t * (a1 * a2)"), a));
    });
}

TEST_CASE("syntax errors report a position")
{
    for (const char* bad : {"", "a *", "* a", "a * (b", "a b", "a ) b", "1a", "a * /b"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_word(bad), SyntaxError);
    }
    try {
        parse_word("a * (b");
    }
    catch (const SyntaxError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("printing round-trips")
{
    for (const auto& w : words_up_to({"a", "b"}, 3))
        CHECK(parse_word(to_string(w)) == w);
    for (const auto& t : terms_up_to_depth({"a", "b"}, 2))
        CHECK(to_string(parse_term(to_string(t))) == to_string(t));
}

TEST_CASE("to_term reads a word back")
{
    for (const auto& w : words_up_to({"a", "b", "c"}, 3))
        CHECK(normalize_left_normed(to_term(w)) == w);
}

TEST_CASE("normalization preserves evaluation exhaustively")
{
    const auto terms = terms_up_to_depth({"a", "b"}, 3);
    const auto cat = quandle_catalog(4);
    long checked = 0;
    for (const auto& t : terms) {
        const auto w = normalize_left_normed(t);
        for (const auto& q : cat) {
            const auto table = q.table();
            oracle::for_each_assignment({"a", "b"}, q.order(), [&](const auto& a) {
                if (oracle::eval(table, t, a) != oracle::eval(table, w, a))
                    FAIL_CHECK(to_string(t) << " vs " << to_string(w));
                ++checked;
            });
        }
    }
    CHECK(checked > 1'000'000);
}

TEST_CASE("reduce examples")
{
    CHECK(reduce(parse_word("a * b / b")) == parse_word("a"));
    CHECK(reduce(parse_word("a * a * b")) == parse_word("a * b"));
    CHECK(reduce(parse_word("a / a * b")) == parse_word("a * b"));
    CHECK(reduce(parse_word("a * b * b")) == parse_word("a * b * b"));
    CHECK(reduce(parse_word("a * b * c / c / b * a")) == parse_word("a"));
    CHECK(reduce(parse_word("a * b")).reduced);
}

TEST_CASE("reduce preserves evaluation and yields reduced forms")
{
    const auto words = words_up_to({"a", "b", "c"}, 3);
    const auto cat = quandle_catalog(4);
    for (const auto& w : words) {
        const auto r = reduce(w);
        CHECK(is_reduced_form(r));
        CHECK(reduce(r) == r);
        CHECK(r.length() <= w.length());
        for (const auto& q : cat) {
            const auto table = q.table();
            oracle::for_each_assignment({"a", "b", "c"}, q.order(), [&](const auto& a) {
                if (oracle::eval(table, w, a) != oracle::eval(table, r, a))
                    FAIL_CHECK(to_string(w));
            });
        }
    }
}

TEST_CASE("reduced-form predicate")
{
    CHECK(is_reduced_form(parse_word("a * b * b")));
    CHECK_FALSE(is_reduced_form(parse_word("a * a")));
    CHECK_FALSE(is_reduced_form(parse_word("a * b / b")));
    CHECK(is_reduced_form(parse_word("t * a1 * a2")));
    CHECK(is_reduced_form(parse_word("t * a2 * a0")));
}

TEST_CASE("group words are freely reduced")
{
    GroupWord w({{"a", 1}, {"b", 1}, {"b", -1}, {"a", -1}, {"c", 1}});
    CHECK(w.letters() == std::vector<Letter>{{"c", 1}});
    const auto x = GroupWord::generator("x");
    CHECK((x * x.inverse()).empty());
    CHECK((x * GroupWord::generator("y")).exponent_sum() == 2);
}

TEST_CASE("eta")
{
    const auto e = eta(parse_word("a * b / c"));
    CHECK(e.letters() == std::vector<Letter>{{"c", 1}, {"b", -1}, {"a", 1}, {"b", 1}, {"c", -1}});
    CHECK(eta(parse_word("a")) == GroupWord::generator("a"));
    CHECK(to_letter_code(e) == "c B a b C");
    CHECK(from_letter_code("c B a b C", {"a", "b", "c"}) == e);
    CHECK_THROWS_AS(from_letter_code("q", {"a"}), UnknownGenerator);
}

TEST_CASE("eta has exponent sum one on 1000 random words")
{
    std::mt19937_64 rng(2024);
    const std::vector<std::string> gens = {"a", "b", "c", "d"};
    std::uniform_int_distribution<int> g(0, 3), len(0, 12), sign(0, 1);
    for (int i = 0; i < 1000; ++i) {
        QuandleWord w(gens[g(rng)]);
        for (int k = len(rng); k > 0; --k)
            w.tail.push_back({gens[g(rng)], sign(rng) ? 1 : -1});
        CHECK(eta(w).exponent_sum() == 1);
    }
}

TEST_CASE("eta is unchanged by reduce")
{
    for (const auto& w : words_up_to({"a", "b"}, 4))
        CHECK(eta(reduce(w)) == eta(w));
}

TEST_CASE("evaluate")
{
    const auto r3 = dihedral(3);
    CHECK(evaluate(parse_word("a * b"), r3, {{"a", 0}, {"b", 1}}) == 2);
    CHECK(evaluate(parse_word("a"), r3, {{"a", 2}}) == 2);
    CHECK_THROWS_AS(evaluate(parse_word("a * b"), r3, {{"a", 0}}), UnassignedGenerator);
    for (const auto& w : words_up_to({"a", "b"}, 3))
        oracle::for_each_assignment({"a", "b"}, 3, [&](const auto& a) {
            CHECK(evaluate(w, r3, a) == oracle::eval(r3.table(), w, a));
            CHECK(evaluate(to_term(w), r3, a) == oracle::eval(r3.table(), w, a));
        });
}
