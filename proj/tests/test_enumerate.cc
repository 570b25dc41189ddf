#include <doctest.h>

#include <extremal/canonical.hh>
#include <extremal/constructions.hh>
#include <extremal/enumerate.hh>
#include <extremal/errors.hh>
#include <extremal/graph6.hh>

#include "oracles.hh"

#include <set>

using namespace extremal;

namespace
{
    auto by_size(int n, int jobs = 1) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> counts(n * (n - 1) / 2 + 1, 0);
        EnumerationTask task;
        task.order = n;
        task.jobs = jobs;
        enumerate(task, [&] (const Graph & g) { ++counts[g.size()]; });
        return counts;
    }

    auto class_set(const EnumerationTask & task) -> std::multiset<std::string>
    {
        std::multiset<std::string> seen;
        enumerate(task, [&] (const Graph & g) { seen.insert(canonical_graph6(g)); });
        return seen;
    }
}

TEST_CASE("totals match the labelled oracle for every order and size up to 7")
{
    std::vector<std::uint64_t> totals;
    for (int n = 1 ; n <= 7 ; ++n) {
        auto expected = oracle::class_counts_by_size(n);
        auto counts = by_size(n);
        CHECK(counts == expected);
        std::uint64_t total = 0;
        for (auto c : counts)
            total += c;
        totals.push_back(total);
    }
    CHECK(totals == std::vector<std::uint64_t>{ 1, 2, 4, 11, 34, 156, 1044 });
}

TEST_CASE("order 6, size 9")
{
    EnumerationTask task;
    task.order = 6;
    task.min_size = 9;
    task.max_size = 9;
    int count = 0;
    enumerate(task, [&] (const Graph & g) { CHECK(g.size() == 9); ++count; });
    CHECK(std::uint64_t(count) == oracle::class_counts_by_size(6)[9]);
    CHECK(count == 21);
}

TEST_CASE("pattern-free enumeration")
{
    auto free_of_c4 = oracle::class_representatives(4, [] (const Graph & g) {
        return oracle::subgraph_count(g, cycle_graph(4)) == 0;
    });
    EnumerationTask task;
    task.order = 4;
    task.forbidden = { Pattern::cycle(4) };
    auto seen = class_set(task);
    CHECK(seen.size() == free_of_c4.size());
    CHECK(seen.size() == 8);
    for (auto & g : free_of_c4)
        CHECK(seen.contains(canonical_graph6(g)));

    for (int n = 5 ; n <= 6 ; ++n) {
        auto expected = oracle::class_representatives(n, [] (const Graph & g) {
            return oracle::subgraph_count(g, book_graph(2)) == 0;
        });
        EnumerationTask t;
        t.order = n;
        t.forbidden = { Pattern::book(2) };
        CHECK(class_set(t).size() == expected.size());
    }
}

TEST_CASE("pruned enumeration keeps only graphs within the bound")
{
    EnumerationTask task;
    task.order = 6;
    task.prune = CopyBound{ Pattern::cycle(4), 1 };
    auto expected = oracle::class_representatives(6, [] (const Graph & g) {
        return oracle::subgraph_count(g, cycle_graph(4)) <= 1;
    });
    auto seen = class_set(task);
    CHECK(seen.size() == expected.size());
    for (auto & g : expected)
        CHECK(seen.contains(canonical_graph6(g)));
}

TEST_CASE("no class is emitted twice and results do not depend on workers")
{
    for (int n : { 6, 7, 8 }) {
        EnumerationTask task;
        task.order = n;
        auto one = class_set(task);
        std::set<std::string> unique(one.begin(), one.end());
        CHECK(unique.size() == one.size());
        for (int jobs : { 2, 3 }) {
            task.jobs = jobs;
            CHECK(class_set(task) == one);
        }
    }
    CHECK(by_size(8) == by_size(8, 4));
}

TEST_CASE("order 8 and 9 totals")
{
    auto total = [] (int n) {
        std::uint64_t t = 0;
        for (auto c : by_size(n))
            t += c;
        return t;
    };
    CHECK(total(8) == 12346);
    CHECK(total(9) == 274668);
}

TEST_CASE("sequential enumeration is deterministic")
{
    EnumerationTask task;
    task.order = 7;
    std::vector<std::string> first, second;
    enumerate(task, [&] (const Graph & g) { first.push_back(graph6_encode(g)); });
    enumerate(task, [&] (const Graph & g) { second.push_back(graph6_encode(g)); });
    CHECK(first == second);
}

TEST_CASE("envelope")
{
    EnumerationTask task;
    task.order = 12;
    CHECK_THROWS_AS(enumerate(task, [] (const Graph &) { }), InfeasibleTask);
    try {
        enumerate(task, [] (const Graph &) { });
    }
    catch (const InfeasibleTask & e) {
        CHECK(e.estimate() > 1e9);
    }

    task.order = 11;
    CHECK_THROWS_AS(enumerate(task, [] (const Graph &) { }), InfeasibleTask);

    // small sizes are allowed at any order
    task.order = 14;
    task.max_size = 3;
    int count = 0;
    enumerate(task, [&] (const Graph &) { ++count; });
    CHECK(count == 1 + 1 + 2 + 5);

    CHECK_NOTHROW(check_envelope(10, 45, false, false, "test"));
    CHECK_NOTHROW(check_envelope(13, 78, false, true, "test"));
}
