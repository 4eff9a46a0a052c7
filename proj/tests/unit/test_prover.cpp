#include "oracles.hpp"

#include "quandle/homomorphism.hpp"
#include "quandle/link.hpp"
#include "quandle/prover.hpp"

#include <doctest.h>

#include <random>

using namespace quandle;

namespace {

QuandlePresentation t_r3()
{
    return free_product(free_quandle(std::vector<std::string>{"t"}), table_presentation(dihedral(3), "a"));
}

QuandlePresentation trefoil_unknot()
{
    return free_product(wirtinger_quandle(braid_closure(parse_braid("s1 s1 s1"))), wirtinger_quandle(unknot()));
}

// Both words take the same value under every homomorphism into q.
bool semantically_equal(const QuandlePresentation& p, const FiniteQuandle& q, const QuandleWord& u,
    const QuandleWord& v)
{
    for (const auto& h : enumerate_homs(p, q)) {
        const auto a = h.assignment();
        if (oracle::eval(q.table(), u, a) != oracle::eval(q.table(), v, a))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("move names round-trip")
{
    for (auto k : {MoveKind::Cancel, MoveKind::InsertPair, MoveKind::DropHead, MoveKind::AddHead,
             MoveKind::ShuffleRight, MoveKind::ShuffleLeft, MoveKind::RelationPrefix, MoveKind::ExpandLetter,
             MoveKind::ContractLetter})
        CHECK(move_kind_from_string(to_string(k)) == k);
    CHECK_FALSE(move_kind_from_string("teleport"));
}

TEST_CASE("single moves")
{
    const auto p = free_quandle(std::vector<std::string>{"a", "b"});
    CHECK(apply_move(p, parse_word("a * b / b"), {MoveKind::Cancel, 0}) == parse_word("a"));
    CHECK_FALSE(apply_move(p, parse_word("a * b * b"), {MoveKind::Cancel, 0}));
    CHECK(apply_move(p, parse_word("a"), {MoveKind::InsertPair, 0, "b", -1}) == parse_word("a / b * b"));
    CHECK(apply_move(p, parse_word("a / a * b"), {MoveKind::DropHead}) == parse_word("a * b"));
    CHECK(apply_move(p, parse_word("a"), {MoveKind::AddHead, 0, "", 1}) == parse_word("a * a"));
    CHECK_FALSE(apply_move(p, parse_word("a"), {MoveKind::InsertPair, 0, "zz", 1}));
}

TEST_CASE("one cancellation")
{
    const auto p = free_quandle(std::vector<std::string>{"a", "b"});
    auto trace = prove_equal(p, parse_word("a * b / b"), parse_word("a"));
    REQUIRE(trace);
    CHECK(trace->steps.size() == 1);
    CHECK(trace->steps[0].move.kind == MoveKind::Cancel);
    CHECK(replay(p, *trace, parse_word("a * b / b"), parse_word("a")));
}

TEST_CASE("identical words need no steps")
{
    const auto p = t_r3();
    auto trace = prove_equal(p, parse_word("t * a1"), parse_word("t * a1"));
    REQUIRE(trace);
    CHECK(trace->steps.empty());
}

TEST_CASE("(t*a1)*a2 = (t*a2)*a0 in <t> * R3 is one distributivity shuffle")
{
    const auto p = t_r3();
    const auto u = parse_word("t * a1 * a2");
    const auto v = parse_word("t * a2 * a0");
    auto trace = prove_equal(p, u, v);
    REQUIRE(trace);
    CHECK(replay(p, *trace, u, v));
    REQUIRE(trace->steps.size() == 1);
    const auto& m = trace->steps[0].move;
    CHECK(m.kind == MoveKind::ShuffleRight);
    // the shuffle uses a1 * a2 = a0
    const auto& r = p.relations()[m.relation];
    CHECK(r.lhs == parse_word("a1 * a2"));
    CHECK(r.rhs == parse_word("a0"));
    CHECK(is_reduced_form(u));
    CHECK(is_reduced_form(v));
    CHECK(u != v);
}

TEST_CASE("distinct free words are never proved equal")
{
    const auto p = free_quandle(std::vector<std::string>{"a", "b"});
    ProofStats stats;
    CHECK_FALSE(prove_equal(p, parse_word("a"), parse_word("a * b"), {8, 50'000}, &stats));
    CHECK(stats.nodes > 0);
}

TEST_CASE("replay rejects tampered traces")
{
    const auto p = t_r3();
    const auto u = parse_word("t * a1 * a2");
    const auto v = parse_word("t * a2 * a0");
    auto trace = prove_equal(p, u, v);
    REQUIRE(trace);
    auto bad = *trace;
    bad.steps[0].word = parse_word("t * a2 * a1");
    CHECK_FALSE(replay(p, bad, u, v));
    bad = *trace;
    bad.steps[0].move.relation = (bad.steps[0].move.relation + 1) % 9;
    CHECK_FALSE(replay(p, bad, u, v));
    CHECK_FALSE(replay(p, *trace, u, parse_word("t * a0")));
}

TEST_CASE("random walks are recovered, and every trace is semantically sound")
{
    std::mt19937_64 rng(8);
    for (const auto& p : {t_r3(), trefoil_unknot()}) {
        const auto gens = p.generator_names();
        std::uniform_int_distribution<std::size_t> g(0, gens.size() - 1);
        std::uniform_int_distribution<int> len(0, 2), sign(0, 1), rel(0, static_cast<int>(p.relations().size()) - 1);
        int found = 0;
        for (int i = 0; i < 60; ++i) {
            QuandleWord u(gens[g(rng)]);
            for (int k = len(rng); k > 0; --k)
                u.tail.push_back({gens[g(rng)], sign(rng) ? 1 : -1});
            // a couple of random moves that are valid for the word
            QuandleWord v = u;
            for (int step = 0; step < 3; ++step) {
                std::vector<Move> candidates;
                for (int pos = 0; pos + 1 < static_cast<int>(v.tail.size()); ++pos) {
                    candidates.push_back({MoveKind::Cancel, pos});
                    for (int r = 0; r < static_cast<int>(p.relations().size()); ++r)
                        for (bool f : {true, false}) {
                            candidates.push_back({MoveKind::ShuffleRight, pos, "", 1, r, f});
                            candidates.push_back({MoveKind::ShuffleLeft, pos, "", 1, r, f});
                        }
                }
                for (int r = 0; r < static_cast<int>(p.relations().size()); ++r)
                    for (bool f : {true, false})
                        candidates.push_back({MoveKind::RelationPrefix, 0, "", 1, r, f});
                candidates.push_back({MoveKind::DropHead});
                std::vector<QuandleWord> next;
                for (const auto& m : candidates)
                    if (auto w = apply_move(p, v, m); w && w->length() <= 6)
                        next.push_back(*w);
                if (next.empty())
                    break;
                v = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
            }
            auto trace = prove_equal(p, u, v, {8, 200'000});
            if (!trace)
                continue;
            ++found;
            CHECK(replay(p, *trace, u, v));
            CHECK(semantically_equal(p, dihedral(3), u, v));
            CHECK(semantically_equal(p, trivial(2), u, v));
        }
        CHECK(found >= 55);
    }
}

TEST_CASE("a node budget below two is exhausted at once")
{
    ProofStats stats;
    CHECK_FALSE(prove_equal(t_r3(), parse_word("t * a1 * a2"), parse_word("t * a2 * a0"), {8, 1}, &stats));
    CHECK(stats.exhausted);
}
