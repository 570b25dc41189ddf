#ifndef EXTREMAL_REPORT_HH
#define EXTREMAL_REPORT_HH 1

#include <extremal/exact_search.hh>
#include <extremal/heuristic.hh>

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace extremal
{
    using Json = nlohmann::ordered_json;

    /// Version of the JSON documents written by report_json and result_json.
    inline constexpr int report_schema_version = 1;

    enum class Scope
    {
        quick,
        full
    };

    auto scope_name(Scope s) -> std::string;
    auto parse_scope(const std::string & text) -> Scope;

    /**
     * One checkable statement: an operation with arguments, an expected value
     * and a comparator (equal, at_least, at_most). Object-valued expectations
     * are compared field by field, each field with the same comparator.
     */
    struct ClaimRecord
    {
        std::string id;
        std::string statement;
        std::string provenance;
        bool trusted_input = false;
        Scope scope = Scope::quick;
        std::string op;
        Json args;
        Json expected;
        std::string comparator = "equal";
    };

    struct ClaimCatalog
    {
        int version = 0;
        std::vector<ClaimRecord> claims;
    };

    /// Parses and validates a catalog document; throws ParseError on unknown
    /// operations, comparators or scopes, and on duplicate ids.
    auto parse_claim_catalog(const std::string & text) -> ClaimCatalog;

    /// The catalog compiled into the library from data/claims.json.
    auto builtin_claim_catalog() -> const ClaimCatalog &;

    enum class Verdict
    {
        pass,
        fail,
        skipped_infeasible,
        skipped_scope
    };

    auto verdict_name(Verdict v) -> std::string;

    struct ClaimOutcome
    {
        ClaimRecord claim;
        Json computed;

        /// Canonical graph6 of graphs backing the computed value, if any.
        std::vector<std::string> witnesses;
        Verdict verdict = Verdict::fail;
        std::string reason;
        double runtime_ms = 0;
    };

    struct VerificationOptions
    {
        Scope scope = Scope::quick;
        int jobs = 1;
        bool override_envelope = false;
        SearchBudget budget;
    };

    struct VerificationReport
    {
        int catalog_version = 0;
        VerificationOptions options;
        std::vector<ClaimOutcome> outcomes;
        int passed = 0;
        int failed = 0;
        int skipped_infeasible = 0;
        int skipped_scope = 0;
        double runtime_ms = 0;
    };

    /// Never throws for a well-formed claim: errors become fail verdicts and
    /// envelope refusals become skipped_infeasible.
    auto evaluate_claim(const ClaimRecord & claim, const VerificationOptions & options) -> ClaimOutcome;

    using ProgressCallback = std::function<void(const ClaimOutcome &)>;

    /// Evaluates every claim in catalog order. Claims outside the scope are
    /// reported as skipped_scope rather than omitted.
    auto verify_claims(const ClaimCatalog & catalog, const VerificationOptions & options,
            const ProgressCallback & progress = { }) -> VerificationReport;

    auto report_json(const VerificationReport & report) -> Json;

    /// {task, value, witnesses, method, runtime_ms} records.
    auto result_json(const TuranResult & r) -> Json;
    auto result_json(const MinCopyResult & r) -> Json;

    /// One graph6 string per line.
    auto write_g6_file(const std::string & path, const std::vector<std::string> & graphs) -> void;
}

#endif
