#include <doctest.h>

#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/counting.hh>
#include <extremal/errors.hh>
#include <extremal/exact_search.hh>

#include "oracles.hh"

using namespace extremal;

namespace
{
    auto f(int n, int d) -> int
    {
        return n % 2 == 1 && d % 2 == 1 ? (n * d - 1) / 2 : n * d / 2;
    }
}

TEST_CASE("basic families")
{
    Graph b2 = build_family("book:p=2");
    CHECK(b2.order() == 4);
    CHECK(b2.size() == 5);
    int codegree_two = 0;
    for (auto [u, v] : b2.edges())
        codegree_two += b2.codegree(u, v) == 2;
    CHECK(codegree_two == 1);

    for (int p = 1 ; p <= 8 ; ++p) {
        CHECK(book_graph(p).order() == p + 2);
        CHECK(book_graph(p).size() == 2 * p + 1);
    }

    Graph pm = build_family("complete_minus_pm:n=6");
    CHECK(is_regular(pm, 4));
    CHECK(pm.size() == 12);

    CHECK(build_family("star:p=3").degree_sequence() == std::vector<int>{ 3, 1, 1, 1 });
    CHECK(build_family("cycle:n=5") == cycle_graph(5));
    CHECK(build_family("complete_bipartite:s=2,t=3").size() == 6);
    CHECK(build_family("circulant:n=6,s=1+3") == circulant_graph(6, { 1, 3 }));
    CHECK(build_family("matching:q=3").size() == 3);
    CHECK(build_family("path:n=4").size() == 3);
    CHECK(build_family("empty:n=4").size() == 0);
    CHECK(build_family("complete:n=5").size() == 10);
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(build_family("complete_minus_pm:n=5"), ParityError);
    CHECK_THROWS_AS(build_family("nonsense:n=5"), ParseError);
    CHECK_THROWS_AS(build_family("cycle:n=5,q=2"), ParseError);
    CHECK_THROWS_AS(build_family("cycle"), ParseError);
    CHECK_THROWS_AS(build_family("cycle:n=x"), ParseError);
    CHECK_THROWS_AS(build_family("cycle:n=2"), RangeError);
    CHECK_THROWS_AS(regular_graph(3, 5), ParityError);
    CHECK_THROWS_AS(regular_graph(0, 5), RangeError);
    CHECK_THROWS_AS(regular_graph(5, 5), RangeError);
}

TEST_CASE("construction specs print back")
{
    auto spec = parse_construction("circulant:n=6,s=1+3");
    CHECK(spec.kind == "circulant");
    CHECK(spec.params.at("s") == std::vector<int>{ 1, 3 });
    CHECK(spec.to_string() == "circulant:n=6,s=1+3");
}

TEST_CASE("regular graphs are regular and hamiltonian")
{
    CHECK(regular_graph(2, 5) == cycle_graph(5));
    for (int n = 2 ; n <= 12 ; ++n)
        for (int k = 1 ; k < n ; ++k) {
            if (k * n % 2 == 1) {
                CHECK_THROWS_AS(regular_graph(k, n), ParityError);
                continue;
            }
            Graph g = regular_graph(k, n);
            CHECK(g.order() == n);
            CHECK(is_regular(g, k));
            if (k >= 2)
                CHECK(hamiltonian_cycle(g).has_value());
        }
}

TEST_CASE("bounded degree graphs attain f(n, d)")
{
    CHECK(bounded_degree_max(5, 3).size() == 7);
    CHECK(bounded_degree_max(5, 3).degree_sequence() == std::vector<int>{ 3, 3, 3, 3, 2 });
    CHECK(is_regular(bounded_degree_max(6, 3), 3));
    CHECK(bounded_degree_max(6, 3).size() == 9);
    CHECK(are_isomorphic(bounded_degree_max(5, 1), disjoint_union(matching_graph(2), empty_graph(1))));

    for (int n = 2 ; n <= 12 ; ++n)
        for (int d = 1 ; d < n ; ++d) {
            Graph g = bounded_degree_max(n, d);
            CHECK(g.order() == n);
            CHECK(g.max_degree() <= d);
            CHECK(g.size() == f(n, d));
            CHECK(bounded_degree_max_size(n, d) == f(n, d));
        }

    // exhaustively no larger graph of maximum degree d exists
    for (int n = 3 ; n <= 8 ; ++n)
        for (int d = 1 ; d < n - 1 ; ++d)
            CHECK(turan_number(n, { Pattern::star(d + 1) }).ex_value == f(n, d));

    CHECK_THROWS_AS(bounded_degree_max(5, 5), RangeError);
    CHECK_THROWS_AS(bounded_degree_max(5, 0), RangeError);
}

TEST_CASE("star witnesses have exactly one star")
{
    auto w = star_witness(4, 7);
    CHECK(w.order() == 7);
    CHECK(w.size() == 11);
    CHECK(w.degree_sequence() == std::vector<int>{ 4, 3, 3, 3, 3, 3, 3 });

    auto w9 = star_witness(4, 9);
    CHECK(w9.size() == 14);
    CHECK(w9.degree_sequence()[0] == 4);
    CHECK(w9.degree_sequence()[1] == 3);

    int checked = 0;
    for (int p = 4 ; p <= 12 ; p += 2)
        for (int n = p + 1 ; n <= 13 ; n += 2) {
            Graph g = star_witness(p, n);
            CHECK(g.order() == n);
            CHECK(g.size() == f(n, p - 1) + 1);
            CHECK(count_star(g, p) == 1);
            CHECK(count_generic(g, Pattern::star(p)) == 1);
            auto degrees = g.degree_sequence();
            CHECK(degrees.front() == p);
            CHECK(degrees[1] == p - 1);
            CHECK(degrees.back() == p - 1);
            ++checked;
        }
    CHECK(checked == 15);

    CHECK_THROWS_AS(star_witness(3, 7), ParityError);
    CHECK_THROWS_AS(star_witness(4, 8), ParityError);
    CHECK_THROWS_AS(star_witness(4, 3), RangeError);
    CHECK_THROWS_AS(star_witness(2, 5), RangeError);
}

TEST_CASE("witness graphs for books")
{
    for (int p = 2 ; p <= 10 ; p += 2) {
        Graph g1 = witness_graph(Witness::g1, p);
        CHECK(g1.order() == p + 2);
        CHECK(g1.size() == p * (p + 2) / 2);
        for (auto [u, v] : g1.edges())
            CHECK(g1.codegree(u, v) == p - 2);

        Graph g2 = witness_graph(Witness::g2, p);
        CHECK(g2.order() == p + 3);
        CHECK(g2.size() == p * (p + 4) / 2);
        CHECK(count_book(g2, p) == 0);

        Graph g5 = witness_graph(Witness::g5, p);
        CHECK(g5.order() == p + 2);
        CHECK(g5.size() == p * (p + 2) / 2 + 1);
        CHECK(count_book(g5, p) == 1);

        Graph g6 = witness_graph(Witness::g6, p);
        CHECK(g6.order() == p + 3);
        CHECK(g6.size() == p * (p + 4) / 2 + 1);
        std::vector<int> degrees(p + 2, p + 1);
        degrees.push_back(p);
        CHECK(g6.degree_sequence() == degrees);
        CHECK(count_book(g6, p) == 1);
    }

    for (int p = 3 ; p <= 9 ; p += 2) {
        Graph g3 = witness_graph(Witness::g3, p);
        CHECK(g3.order() == p + 2);
        CHECK(g3.size() == (p + 1) * (p + 1) / 2);
        CHECK(count_book(g3, p) == 0);

        Graph g4 = witness_graph(Witness::g4, p);
        CHECK(g4.order() == p + 3);
        CHECK(g4.size() == (p + 1) * (p + 3) / 2);
        for (auto [u, v] : g4.edges())
            CHECK(g4.codegree(u, v) == p - 1);

        Graph small = witness_graph(Witness::t4_small, p);
        CHECK(small.order() == p + 2);
        CHECK(small.size() == (p + 1) * (p + 1) / 2 + 1);
        CHECK(count_book(small, p) == 3);

        Graph large = witness_graph(Witness::t4_large, p);
        CHECK(large.order() == p + 3);
        CHECK(large.size() == (p + 1) * (p + 3) / 2 + 1);
        CHECK(count_book(large, p) == CopyCount(3 * (p + 1)));
    }

    CHECK(are_isomorphic(build_family("t4_large:p=3"), join(complete_graph(2), complete_minus_pm(4))));
    CHECK(build_family("g5:p=4").size() == 13);

    CHECK_THROWS_AS(witness_graph(Witness::g5, 3), ParityError);
    CHECK_THROWS_AS(witness_graph(Witness::g3, 4), ParityError);
    CHECK_THROWS_AS(witness_graph(Witness::t4_small, 4), ParityError);
    CHECK_THROWS_AS(parse_witness("g7"), ParseError);
}
