#include <doctest.h>

#include <extremal/errors.hh>
#include <extremal/report.hh>

#include <filesystem>
#include <fstream>
#include <set>

using namespace extremal;

namespace
{
    auto catalog_of(const std::string & claims) -> std::string
    {
        return R"({"catalog_version": 7, "claims": [)" + claims + "]}";
    }

    auto claim(const std::string & id, const std::string & op, const std::string & args, const std::string & expected,
            const std::string & comparator = "equal", const std::string & scope = "quick") -> std::string
    {
        return R"({"id": ")" + id + R"(", "statement": "s", "provenance": "somewhere", "scope": ")" + scope
            + R"(", "op": ")" + op + R"(", "args": )" + args + R"(, "expected": )" + expected
            + R"(, "comparator": ")" + comparator + R"("})";
    }
}

TEST_CASE("built-in catalog is well formed")
{
    auto & catalog = builtin_claim_catalog();
    CHECK(catalog.version >= 1);
    CHECK(catalog.claims.size() > 80);

    std::set<std::string> ids;
    int trusted = 0;
    for (auto & c : catalog.claims) {
        CHECK(ids.insert(c.id).second);
        CHECK(! c.provenance.empty());
        CHECK(! c.statement.empty());
        trusted += c.trusted_input;
    }
    CHECK(trusted == 2);
    CHECK(ids.contains("c4-lower-bound-12"));
    CHECK(ids.contains("c4-heuristic-13"));
}

TEST_CASE("malformed catalogs are rejected")
{
    CHECK_THROWS_AS(parse_claim_catalog("{"), ParseError);
    CHECK_THROWS_AS(parse_claim_catalog(R"({"claims": []})"), ParseError);
    CHECK_THROWS_AS(parse_claim_catalog(catalog_of(claim("a", "teleport", "{}", "1"))), ParseError);
    CHECK_THROWS_AS(parse_claim_catalog(catalog_of(claim("a", "formula", "{}", "1", "roughly"))), ParseError);
    CHECK_THROWS_AS(parse_claim_catalog(catalog_of(claim("a", "formula", "{}", "1", "equal", "medium"))), ParseError);
    CHECK_THROWS_AS(parse_claim_catalog(catalog_of(claim("a", "formula", "{}", "1") + "," + claim("a", "formula", "{}", "1"))), ParseError);
}

TEST_CASE("verdicts")
{
    auto catalog = parse_claim_catalog(catalog_of(
        claim("right", "formula", R"({"name": "ex_star", "n": 9, "p": 4})", "13") + ","
        + claim("wrong", "formula", R"({"name": "ex_star", "n": 9, "p": 4})", "14") + ","
        + claim("bound", "count", R"({"graph": "complete:n=4", "pattern": "c4"})", "2", "at_least") + ","
        + claim("object", "construct", R"({"graph": "g5:p=4"})", R"({"order": 6, "copies": {"b:4": 1}})") + ","
        + claim("broken", "formula", R"({"name": "ex_star", "n": 3, "p": 9})", "1") + ","
        + claim("refused", "min_copies", R"({"n": 12, "e": 22, "pattern": "c4"})", "2") + ","
        + claim("later", "formula", R"({"name": "ex_triangle", "n": 4})", "4", "equal", "full")));
    CHECK(catalog.version == 7);

    auto report = verify_claims(catalog, VerificationOptions{ });
    REQUIRE(report.outcomes.size() == 7);
    CHECK(report.outcomes[0].verdict == Verdict::pass);
    CHECK(report.outcomes[1].verdict == Verdict::fail);
    CHECK(report.outcomes[1].computed == 13);
    CHECK(report.outcomes[2].verdict == Verdict::pass);
    CHECK(report.outcomes[3].verdict == Verdict::pass);
    CHECK(report.outcomes[4].verdict == Verdict::fail);
    CHECK(! report.outcomes[4].reason.empty());
    CHECK(report.outcomes[5].verdict == Verdict::skipped_infeasible);
    CHECK(report.outcomes[6].verdict == Verdict::skipped_scope);
    CHECK(report.passed == 3);
    CHECK(report.failed == 2);
    CHECK(report.skipped_infeasible == 1);
    CHECK(report.skipped_scope == 1);

    VerificationOptions full;
    full.scope = Scope::full;
    CHECK(evaluate_claim(catalog.claims[6], full).verdict == Verdict::pass);
}

TEST_CASE("report JSON")
{
    auto catalog = parse_claim_catalog(catalog_of(
        claim("min", "min_copies", R"({"n": 5, "e": 7, "pattern": "c4"})", "2")));
    auto report = verify_claims(catalog, VerificationOptions{ });
    auto j = report_json(report);
    CHECK(j["schema_version"] == report_schema_version);
    CHECK(j["catalog_version"] == 7);
    CHECK(j["scope"] == "quick");
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["total"] == 1);
    auto & c = j["claims"][0];
    for (auto key : { "id", "statement", "provenance", "op", "args", "expected", "computed", "verdict", "reason", "witnesses", "runtime_ms" })
        CHECK_MESSAGE(c.contains(key), key);
    CHECK(c["verdict"] == "pass");
    CHECK(c["witnesses"].size() >= 1);
}

TEST_CASE("quick scope passes and is reproducible")
{
    VerificationOptions options;
    auto first = verify_claims(builtin_claim_catalog(), options);
    CHECK(first.failed == 0);
    CHECK(first.skipped_infeasible == 0);
    CHECK(first.passed + first.skipped_scope == int(builtin_claim_catalog().claims.size()));
    for (auto & o : first.outcomes)
        CHECK_MESSAGE(o.verdict != Verdict::fail, o.claim.id << ": " << o.reason);

    auto second = verify_claims(builtin_claim_catalog(), options);
    REQUIRE(second.outcomes.size() == first.outcomes.size());
    for (size_t i = 0 ; i < first.outcomes.size() ; ++i) {
        CHECK(first.outcomes[i].verdict == second.outcomes[i].verdict);
        CHECK(first.outcomes[i].computed == second.outcomes[i].computed);
        CHECK(first.outcomes[i].witnesses == second.outcomes[i].witnesses);
    }
}

TEST_CASE("lower bounds beyond the envelope are reported as infeasible")
{
    VerificationOptions options;
    options.scope = Scope::full;
    for (auto & c : builtin_claim_catalog().claims)
        if (c.id == "c4-lower-bound-12" || c.id == "c4-lower-bound-13" || c.id == "ex-c4-12")
            CHECK(evaluate_claim(c, options).verdict == Verdict::skipped_infeasible);
}

TEST_CASE("result records and witness files")
{
    auto t = turan_number(5, { Pattern::complete(3) });
    auto j = result_json(t);
    CHECK(j["value"] == 6);
    CHECK(j["method"] == "exhaustive");
    CHECK(j["task"]["order"] == 5);
    CHECK(j["witnesses"].size() == 1);

    auto m = min_copies(5, 7, Pattern::cycle(4));
    auto k = result_json(m);
    CHECK(k["value"] == 2);
    CHECK(k["task"]["pattern"] == "c4");

    auto path = std::filesystem::temp_directory_path() / "extremal_report_test.g6";
    write_g6_file(path.string(), m.witnesses);
    std::ifstream in{ path };
    std::string line;
    int lines = 0;
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == int(m.witnesses.size()));
    std::filesystem::remove(path);

    CHECK(parse_scope("full") == Scope::full);
    CHECK_THROWS_AS(parse_scope("everything"), ParseError);
}
