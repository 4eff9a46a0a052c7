#include "oracles.hpp"

#include "quandle/errors.hpp"
#include "quandle/homomorphism.hpp"
#include "quandle/link.hpp"

#include <doctest.h>

#include <random>

using namespace quandle;

namespace {

const char* const kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* const kFigureEightPd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

LinkDiagram closure(const char* braid) { return braid_closure(parse_braid(braid)); }

std::vector<int> generators_of(const BraidWord& b)
{
    std::vector<int> out;
    for (const auto& l : b.letters)
        out.push_back(l.index);
    return out;
}

} // namespace

TEST_CASE("braid parsing")
{
    auto b = parse_braid("s1 s1 s1");
    CHECK(b.strands == 2);
    CHECK(b.letters.size() == 3);
    for (const auto& l : b.letters)
        CHECK(l.sign == 1);
    b = parse_braid("s1 s2^-1 s1 s2^-1");
    CHECK(b.strands == 3);
    CHECK(b.letters[1] == BraidLetter{2, -1});
    CHECK(parse_braid("s1", 4).strands == 4);
    CHECK(to_string(b) == "s1 s2^-1 s1 s2^-1");

    CHECK_THROWS_AS(parse_braid(""), EmptyBraid);
    CHECK_THROWS_AS(parse_braid("   "), EmptyBraid);
    CHECK_THROWS_AS(parse_braid("s0"), IndexOutOfRange);
    CHECK_THROWS_AS(parse_braid("s3", 3), IndexOutOfRange);
    for (const char* bad : {"t1", "s", "s1^2", "s1^-", "s1s2", "s-1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_braid(bad), SyntaxError);
    }
}

TEST_CASE("closures")
{
    const auto trefoil = closure("s1 s1 s1");
    CHECK(trefoil.arcs == 3);
    CHECK(trefoil.crossings.size() == 3);
    CHECK(trefoil.components.size() == 1);

    const auto hopf = closure("s1 s1");
    CHECK(hopf.arcs == 2);
    CHECK(hopf.components.size() == 2);

    const auto u = braid_closure({1, {}});
    CHECK(u == unknot());
    CHECK(u.crossings.empty());

    CHECK(braid_closure({3, {}}).components.size() == 3);
}

TEST_CASE("component counts match the permutation cycles")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const int strands = 1 + static_cast<int>(rng() % 5);
        BraidWord b{strands, {}};
        if (strands > 1)
            for (int k = static_cast<int>(rng() % 8); k > 0; --k)
                b.letters.push_back({1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 ? 1 : -1});
        const auto d = braid_closure(b);
        CHECK(static_cast<int>(d.components.size()) == oracle::braid_cycles(strands, generators_of(b)));
        CHECK_NOTHROW(validate_diagram(d));
        CHECK(abelianization_rank(wirtinger_quandle(d)) == static_cast<int>(d.components.size()));
    }
}

TEST_CASE("Wirtinger presentations")
{
    const auto p = wirtinger_quandle(closure("s1 s1 s1"));
    CHECK(p.generators().size() == 3);
    CHECK(p.relations().size() == 3);
    for (const auto& r : p.relations()) {
        CHECK(r.lhs.tail.size() == 1);
        CHECK(r.rhs.tail.empty());
    }
    CHECK(oracle::count_homs(p, dihedral(3).table()) == 9);

    const auto u = wirtinger_quandle(unknot());
    CHECK(u.generators().size() == 1);
    CHECK(u.is_free());

    const auto hopf = wirtinger_quandle(closure("s1 s1"));
    CHECK(hopf.generators().size() == 2);
    CHECK(hopf.relations().size() == 2);
    CHECK(oracle::count_homs(hopf, trivial(2).table()) == 4);
}

TEST_CASE("link groups")
{
    const auto u = link_group(unknot());
    CHECK(u.generators.size() == 1);
    CHECK(u.relators.empty());
    const auto t = link_group(closure("s1 s1 s1"));
    CHECK(t.relators.size() == 3);
    for (const auto& r : t.relators)
        CHECK(r.exponent_sum() == 0);
}

TEST_CASE("abelianization rank counts components")
{
    CHECK(abelianization_rank(wirtinger_quandle(closure("s1 s1 s1"))) == 1);
    CHECK(abelianization_rank(wirtinger_quandle(closure("s1 s1"))) == 2);
    const std::vector<LinkDiagram> split = {closure("s1 s1 s1"), unknot()};
    CHECK(abelianization_rank(split_union(split)) == 2);
}

TEST_CASE("split unions")
{
    const std::vector<LinkDiagram> two_unknots = {unknot(), unknot()};
    const auto fq = split_union(two_unknots);
    CHECK(fq.generators().size() == 2);
    CHECK(fq.is_free());
    CHECK(fq.factor_of(0) == 0);
    CHECK(fq.factor_of(1) == 1);

    const std::vector<LinkDiagram> tu = {closure("s1 s1 s1"), unknot()};
    const auto p = split_union(tu);
    CHECK(count_colorings(p, dihedral(3)) == 27);
    CHECK(oracle::count_homs(p, dihedral(3).table()) == 27);
    for (int i = 0; i < 3; ++i)
        CHECK(p.factor_of(i) == 0);
    CHECK(p.factor_of(3) == 1);

    CHECK(count_colorings(split_union(two_unknots), trivial(3)) == 9);
}

TEST_CASE("colorings multiply over split unions")
{
    const std::vector<LinkDiagram> ds = {closure("s1 s1 s1"), closure("s1 s1"), closure("s1 s2^-1 s1 s2^-1"), unknot()};
    for (const auto& a : ds)
        for (const auto& b : ds) {
            const std::vector<LinkDiagram> pair = {a, b};
            const auto p = split_union(pair);
            for (const auto& f : quandle_catalog(4))
                CHECK(count_colorings(p, f) ==
                      count_colorings(wirtinger_quandle(a), f) * count_colorings(wirtinger_quandle(b), f));
        }
}

TEST_CASE("PD codes")
{
    const auto t = parse_pd(kTrefoilPd);
    CHECK(t.arcs == 3);
    CHECK(t.crossings.size() == 3);
    CHECK(t.components.size() == 1);
    CHECK(count_colorings(wirtinger_quandle(t), dihedral(3)) == 9);
    CHECK(parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]") == t);

    const auto f = parse_pd(kFigureEightPd);
    CHECK(f.arcs == 4);
    CHECK(count_colorings(wirtinger_quandle(f), dihedral(5)) == 25);

    std::string warning;
    CHECK(parse_pd("", &warning) == unknot());
    CHECK_FALSE(warning.empty());

    CHECK_THROWS_AS(parse_pd("X(1,1,1,1)"), InconsistentArcs);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), InconsistentArcs);
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), SyntaxError);
    CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), SyntaxError);
}

TEST_CASE("braid and PD trefoils give the same colorings")
{
    const auto braid = wirtinger_quandle(closure("s1 s1 s1"));
    const auto pd = wirtinger_quandle(parse_pd(kTrefoilPd));
    for (const auto& f : quandle_catalog(5))
        CHECK(count_colorings(braid, f) == count_colorings(pd, f));
    const auto braid8 = wirtinger_quandle(closure("s1 s2^-1 s1 s2^-1"));
    const auto pd8 = wirtinger_quandle(parse_pd(kFigureEightPd));
    for (const auto& f : quandle_catalog(5))
        CHECK(count_colorings(braid8, f) == count_colorings(pd8, f));
}

TEST_CASE("mirrors swap * and its inverse")
{
    const auto t = closure("s1 s1 s1");
    const auto m = mirror(t);
    CHECK(mirror(m) == t);
    const auto p = wirtinger_quandle(t);
    const auto q = wirtinger_quandle(m);
    for (std::size_t i = 0; i < p.relations().size(); ++i)
        CHECK(p.relations()[i].lhs.tail[0].sign == -q.relations()[i].lhs.tail[0].sign);
    // the braid s1^-3 is the mirror trefoil: same colorings, all crossings negative
    const auto inv = closure("s1^-1 s1^-1 s1^-1");
    for (const auto& c : inv.crossings)
        CHECK(c.sign == -1);
    for (const auto& f : quandle_catalog(4))
        CHECK(count_colorings(wirtinger_quandle(inv), f) == count_colorings(q, f));
    // the PD trefoil has negative crossings in this convention
    for (const auto& c : parse_pd(kTrefoilPd).crossings)
        CHECK(c.sign == -1);
    for (const auto& f : quandle_catalog(5))
        CHECK(count_colorings(p, f) == count_colorings(q, f));
}

TEST_CASE("diagram validation")
{
    CHECK_THROWS_AS(validate_diagram({0, {}, {}}), InconsistentArcs);
    CHECK_THROWS_AS(validate_diagram({2, {{0, 1, 5, 1}}, {{0, 1}}}), InconsistentArcs);
    CHECK_THROWS_AS(validate_diagram({2, {{0, 1, 1, 2}}, {{0}, {1}}}), InconsistentArcs);
    CHECK_THROWS_AS(validate_diagram({2, {{0, 1, 0, 1}}, {{0, 1}}}), InconsistentArcs);
    auto d = closure("s1 s1");
    d.components = {{0, 1}};
    CHECK_THROWS_AS(validate_diagram(d), InconsistentArcs);
}
