#include <doctest.h>

#include <extremal/constructions.hh>
#include <extremal/counting.hh>
#include <extremal/errors.hh>

#include "oracles.hh"

using namespace extremal;

TEST_CASE("closed-form counters on small graphs")
{
    CHECK(count_star(star_witness(4, 9), 4) == 1);
    CHECK(count_star(star_graph(3), 2) == 3);
    CHECK(count_star(cycle_graph(5), 2) == 5);

    CHECK(count_book(witness_graph(Witness::g5, 4), 4) == 1);
    CHECK(count_book(witness_graph(Witness::t4_small, 3), 3) == 3);
    CHECK(count_book(witness_graph(Witness::t4_large, 3), 3) == 12);

    CHECK(count_c4(complete_graph(4)) == 3);
    CHECK(count_c4(complete_bipartite_graph(2, 3)) == 3);
    CHECK(count_c4(cycle_graph(4)) == 1);

    CHECK(count_triangles(complete_graph(4)) == 4);
    CHECK(count_triangles(cycle_graph(5)) == 0);
    Graph k23 = complete_bipartite_graph(2, 3);
    k23.add_edge(2, 3);
    CHECK(count_triangles(k23) >= 2);
}

TEST_CASE("generic counter")
{
    CHECK(count_generic(cycle_graph(4), Pattern::path(4)) == 4);
    CHECK(count_generic(complete_graph(4), Pattern::book(2)) == 6);
    CHECK(oracle::subgraph_count(complete_graph(4), book_graph(2)) == 6);
    CHECK(count_generic(complete_graph(5), Pattern::cycle(5)) == 12);
    CHECK(count_generic(empty_graph(3), Pattern::path(4)) == 0);

    std::mt19937_64 rng{ 41 };
    std::vector<Pattern> patterns = { Pattern::path(4), Pattern::book(2), Pattern::star(3), Pattern::cycle(4),
        Pattern::complete(3), Pattern::complete_bipartite(2, 2), Pattern::path(3),
        Pattern{ disjoint_union(complete_graph(2), complete_graph(2)) } };
    for (int trial = 0 ; trial < 150 ; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 6);
        for (auto & h : patterns)
            CHECK(count_generic(g, h) == oracle::subgraph_count(g, h.graph()));
    }
}

TEST_CASE("specialised counters agree with the generic counter")
{
    std::vector<Pattern> patterns;
    for (int p = 2 ; p <= 5 ; ++p) {
        patterns.push_back(Pattern::star(p));
        patterns.push_back(Pattern::book(p));
    }
    patterns.push_back(Pattern::cycle(4));
    patterns.push_back(Pattern::complete(3));

    std::mt19937_64 rng{ 42 };
    for (auto & h : patterns) {
        int mismatches = 0;
        for (int trial = 0 ; trial < 10000 ; ++trial) {
            Graph g = oracle::random_graph(rng, 1, 9);
            mismatches += count_copies(g, h) != count_generic(g, h);
        }
        CHECK_MESSAGE(mismatches == 0, h.name());
    }

    for (int p = 2 ; p <= 5 ; ++p)
        for (int trial = 0 ; trial < 500 ; ++trial) {
            Graph g = oracle::random_graph(rng, 1, 9);
            CHECK(count_star(g, p) == count_generic(g, Pattern::star(p)));
            CHECK(count_book(g, p) == count_generic(g, Pattern::book(p)));
        }
}

TEST_CASE("pattern kinds are recognised however the pattern is built")
{
    CHECK(Pattern{ star_graph(4) }.kind() == PatternKind::star);
    CHECK(Pattern{ book_graph(3) }.kind() == PatternKind::book);
    CHECK(Pattern{ complete_bipartite_graph(2, 2) }.kind() == PatternKind::cycle4);
    CHECK(Pattern{ cycle_graph(3) }.kind() == PatternKind::triangle);
    CHECK(Pattern{ path_graph(4) }.kind() == PatternKind::generic);
    CHECK(parse_pattern("kab:1,3").kind() == PatternKind::star);
    CHECK(Pattern{ book_graph(2) }.automorphism_count() == 4);
}

TEST_CASE("counters never decrease when an edge is added")
{
    std::vector<Pattern> patterns;
    for (int p = 2 ; p <= 5 ; ++p) {
        patterns.push_back(Pattern::star(p));
        patterns.push_back(Pattern::book(p));
    }
    patterns.push_back(Pattern::cycle(4));
    patterns.push_back(Pattern::complete(3));
    patterns.push_back(Pattern::path(4));

    std::mt19937_64 rng{ 43 };
    for (int trial = 0 ; trial < 3000 ; ++trial) {
        Graph g = oracle::random_graph(rng, 3, 11);
        auto pairs = complement(g).edges();
        if (pairs.empty())
            continue;
        auto [u, v] = pairs[rng() % pairs.size()];
        Graph bigger = g;
        bigger.add_edge(u, v);
        for (auto & h : patterns)
            CHECK(count_copies(bigger, h) >= count_copies(g, h));
    }
}

TEST_CASE("existence conditions")
{
    std::mt19937_64 rng{ 44 };
    for (int trial = 0 ; trial < 2000 ; ++trial) {
        Graph g = oracle::random_graph(rng, 2, 10);
        for (int p = 2 ; p <= 5 ; ++p) {
            int max_codegree = 0;
            for (auto [u, v] : g.edges())
                max_codegree = std::max(max_codegree, g.codegree(u, v));
            CHECK((count_book(g, p) >= 1) == (max_codegree >= p));
            CHECK((count_star(g, p) >= 1) == (g.max_degree() >= p));
            CHECK(contains(g, Pattern::book(p)) == (count_book(g, p) >= 1));
            CHECK(contains(g, Pattern::star(p)) == (count_star(g, p) >= 1));
        }
        CHECK(contains(g, Pattern::cycle(4)) == (count_c4(g) >= 1));
        CHECK(contains(g, Pattern::path(4)) == (count_generic(g, Pattern::path(4)) >= 1));
    }

    // a larger book holds p + 1 books of one page fewer through its base
    for (int p = 2 ; p <= 8 ; ++p) {
        CHECK(count_book(book_graph(p + 1), p) == CopyCount(p + 1));
        CHECK(binomial(p + 1, p) == std::uint64_t(p + 1));
    }
}

TEST_CASE("contains_any")
{
    auto family = parse_pattern_family("family:c3,p4,k13");
    REQUIRE(family.size() == 3);
    CHECK(contains_any(cycle_graph(5), family));
    CHECK(! contains_any(matching_graph(3), family));
    CHECK(contains_any(disjoint_union(complete_graph(3), empty_graph(2)), { Pattern::complete(3) }));
    CHECK(! contains_any(complete_graph(5), { }));
}

TEST_CASE("argument errors")
{
    CHECK_THROWS_AS(count_star(complete_graph(3), 1), RangeError);
    CHECK_THROWS_AS(count_book(complete_graph(3), 1), RangeError);
    CHECK_THROWS_AS(Pattern{ empty_graph(3) }, RangeError);
    CHECK_THROWS_AS(Pattern{ disjoint_union(complete_graph(2), empty_graph(1)) }, RangeError);
    CHECK_THROWS_AS(binomial(200, 100), RangeError);
    CHECK(binomial(62, 31) == 465428353255261088ULL);
}

TEST_CASE("pattern mini-language")
{
    CHECK(parse_pattern("c4").graph().size() == 4);
    CHECK(parse_pattern("b:4").graph() == book_graph(4));
    CHECK(parse_pattern("s:3").graph() == star_graph(3));
    CHECK(parse_pattern("k:4").graph() == complete_graph(4));
    CHECK(parse_pattern("p:4").graph() == path_graph(4));
    CHECK(parse_pattern("c:5").graph() == cycle_graph(5));
    CHECK(parse_pattern("g6:C~").graph() == complete_graph(4));
    CHECK(parse_patterns("family:c3,p4,k13").size() == 3);
    CHECK(parse_patterns("b:2").size() == 1);
    CHECK_THROWS_AS(parse_pattern("x:3"), ParseError);
    CHECK_THROWS_AS(parse_pattern("b:"), ParseError);
    CHECK_THROWS_AS(parse_pattern("family:c3"), ParseError);
    CHECK_THROWS_AS(parse_pattern_family("family:c3,,p4"), ParseError);
}
