#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degcut/enumerate.hpp"
#include "degcut/graph.hpp"

namespace degcut {

// ---------------------------------------------------------------------------
// Size bounds. All comparisons are exact.

/// 2m >= (k - 1/38) n + (13 n / 190) sqrt(k), decided in Q[sqrt k].
/// Throws invalid_input for k < 1.
bool meets_sqrt_size_bound(int k, long long n, long long m);

/// 10m >= 27n - 35.
bool meets_two_degenerate_size_bound(long long n, long long m);

/// 2m <= (k+3) n + (k-1): the edge budget under which a connected graph of
/// order >= k+6 must have a minimum k-degenerate cut.
bool within_min_cut_edge_budget(int k, long long n, long long m);

/// delta(g) >= k+2. Meant for graphs already known to have no k-degenerate
/// cut; false means the cut search missed the neighbourhood of a low-degree vertex.
bool check_min_degree(const Graph& g, int k);

// ---------------------------------------------------------------------------
// Local degree properties.

enum class ClaimStatus { holds, vacuous, violated };

struct ClaimReport {
    ClaimStatus status = ClaimStatus::vacuous;
    int qualifying = 0;         // vertices the property constrains
    std::optional<int> witness; // first violating vertex
    std::string detail;
};

std::string_view to_string(ClaimStatus s);

/// Every vertex of degree <= k + sqrt(k)/5 has at least
/// k - 2k/25 - 2 sqrt(k)/5 neighbours of degree >= k + sqrt(k)/5.
ClaimReport check_large_neighbour_property(const Graph& g, int k);

/// Every vertex of degree 5 has neighbourhood degree sum >= 29.
ClaimReport check_neighbour_degree_sum(const Graph& g);

// ---------------------------------------------------------------------------
// Verification over graph streams.

/// Statements the harness can check. Ids are "thm1", "thm2", "thm3", "mindeg".
enum class Statement {
    sqrt_size_bound,  // n >= 2k+2, no k-degenerate cut  =>  sqrt size bound
    two_degenerate,   // n >= 5, no 2-degenerate cut     =>  10m >= 27n - 35
    minimum_cut,      // connected, n >= k+6, edge budget =>  minimum k-degenerate cut
    min_degree,       // n >= k+2, no k-degenerate cut   =>  delta >= k+2
};

std::string_view statement_id(Statement s);
std::optional<Statement> parse_statement(std::string_view id);

struct GraphVerdict {
    bool hypothesis = false; // hypotheses hold (cut search was conclusive)
    bool undecided = false;  // cut search ran out of budget
    std::optional<bool> has_degenerate_cut; // set whenever a full k-degenerate cut search ran
    std::optional<std::string> violation;
};

/// Evaluates hypotheses cheapest first (n, m, delta; then connectivity; then
/// cut search) and, if they hold, the conclusion.
GraphVerdict check_statement(Statement s, int k, const Graph& g);

struct Violation {
    std::string graph6;
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    Statement statement = Statement::two_degenerate;
    int k = 2;
    int n_min = -1;
    int n_max = -1;
    std::uint64_t scanned = 0;
    std::uint64_t hypothesis_hits = 0;
    std::uint64_t undecided = 0;
    std::vector<Violation> violations; // sorted by graph6, one per isomorphism class for n <= 8
    bool exhaustive = false;
    double seconds = 0;

    bool passed() const { return violations.empty(); }

    void record(const Graph& g, const GraphVerdict& verdict);
    /// Associative and order-independent apart from `seconds`, which adds.
    void merge(const VerificationReport& other);

    nlohmann::ordered_json to_json() const;
};

/// Called for each graph after it is checked; may run concurrently when jobs > 1.
using VerifyObserver = std::function<void(const Graph&, const GraphVerdict&)>;

/// Verifies every graph produced by `next` (nullopt ends the stream).
/// Stream errors propagate. The report is never marked exhaustive.
VerificationReport verify_stream(Statement s, int k, const std::function<std::optional<Graph>()>& next,
                                 const VerifyObserver& observer = {});

/// Verifies every labeled graph of `spec`, split over `jobs` worker threads.
/// Marked exhaustive when no graph was left undecided.
VerificationReport verify_enumeration(Statement s, int k, const EnumerationSpec& spec, int jobs = 1,
                                      const VerifyObserver& observer = {});

} // namespace degcut
