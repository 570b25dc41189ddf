#include <doctest.h>

#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/graph6.hh>

#include "oracles.hh"

using namespace extremal;

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng{ 31 };
    for (int trial = 0 ; trial < 10000 ; ++trial) {
        Graph g = oracle::random_graph(rng, 1, 13);
        Graph h = oracle::permute(g, oracle::random_permutation(rng, g.order()));
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical form is invariant on highly symmetric graphs")
{
    std::mt19937_64 rng{ 32 };
    std::vector<Graph> graphs = { complete_graph(9), empty_graph(9), cycle_graph(12), complete_bipartite_graph(4, 5),
        complete_minus_pm(10), circulant_graph(13, { 1, 5 }), circulant_graph(12, { 1, 3, 6 }),
        disjoint_union(cycle_graph(5), cycle_graph(5)), disjoint_union(complete_graph(3), complete_graph(3)) };
    Graph petersen = disjoint_union(cycle_graph(5), circulant_graph(5, { 2 }));
    for (int i = 0 ; i < 5 ; ++i)
        petersen.add_edge(i, i + 5);
    graphs.push_back(petersen);

    for (auto & g : graphs)
        for (int trial = 0 ; trial < 100 ; ++trial)
            CHECK(canonical_form(g) == canonical_form(oracle::permute(g, oracle::random_permutation(rng, g.order()))));
}

TEST_CASE("equal canonical forms exactly for isomorphic graphs")
{
    std::mt19937_64 rng{ 33 };
    int isomorphic_pairs = 0;
    for (int trial = 0 ; trial < 3000 ; ++trial) {
        int n = 1 + int(rng() % 8);
        // sparse graphs of equal size give many near misses
        Graph g = oracle::random_graph(rng, n, 0.4), h = oracle::random_graph(rng, n, 0.4);
        if (trial % 3 == 0)
            h = oracle::permute(g, oracle::random_permutation(rng, n));
        bool expected = oracle::isomorphic(g, h);
        isomorphic_pairs += expected;
        CHECK((canonical_form(g) == canonical_form(h)) == expected);
        CHECK(are_isomorphic(g, h) == expected);
    }
    CHECK(isomorphic_pairs > 1000);
}

TEST_CASE("named pairs")
{
    Graph k33 = complete_bipartite_graph(3, 3), circ = circulant_graph(6, { 1, 3 });
    CHECK(oracle::isomorphic(k33, circ));
    CHECK(canonical_form(k33) == canonical_form(circ));

    Graph c6 = cycle_graph(6), two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(c6.size() == two_triangles.size());
    CHECK(canonical_form(c6) != canonical_form(two_triangles));

    Graph c5 = cycle_graph(5);
    CHECK(canonical_form(c5) == canonical_form(oracle::permute(c5, { 3, 0, 4, 1, 2 })));
}

TEST_CASE("automorphism counts")
{
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(cycle_graph(4)) == 8);
    CHECK(automorphism_count(book_graph(2)) == 4);
    CHECK(oracle::automorphisms(book_graph(2)) == 4);
    CHECK(automorphism_count(complete_graph(12)) == 479001600);
    CHECK(automorphism_count(empty_graph(1)) == 1);

    Graph petersen = disjoint_union(cycle_graph(5), circulant_graph(5, { 2 }));
    for (int i = 0 ; i < 5 ; ++i)
        petersen.add_edge(i, i + 5);
    CHECK(automorphism_count(petersen) == 120);

    std::mt19937_64 rng{ 34 };
    for (int trial = 0 ; trial < 300 ; ++trial) {
        Graph g = oracle::random_graph(rng, 1, 7);
        CHECK(automorphism_count(g) == oracle::automorphisms(g));
    }
}

TEST_CASE("automorphism generators are automorphisms")
{
    std::mt19937_64 rng{ 35 };
    for (int trial = 0 ; trial < 300 ; ++trial) {
        Graph g = oracle::random_graph(rng, 1, 12);
        for (auto & gen : automorphism_generators(g)) {
            std::vector<int> perm(gen.begin(), gen.begin() + g.order());
            CHECK(oracle::permute(g, perm) == g);
        }
    }
}

TEST_CASE("canonical graph round trips and is a relabelling")
{
    std::mt19937_64 rng{ 36 };
    for (int trial = 0 ; trial < 500 ; ++trial) {
        Graph g = oracle::random_graph(rng, 1, 8);
        auto label = canonical_form(g);
        Graph c = label.graph();
        CHECK(oracle::isomorphic(g, c));
        CHECK(graph6_decode(label.graph6()) == c);
        CHECK(canonical_form(c) == label);
        CHECK(canonical_graph6(g) == label.graph6());
    }
}
