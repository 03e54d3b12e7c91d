#include "degcut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "degcut/connectivity.hpp"
#include "degcut/cut_search.hpp"
#include "degcut/errors.hpp"
#include "degcut/graph6.hpp"
#include "degcut/parallel.hpp"
#include "degcut/quad_surd.hpp"

namespace degcut {

bool meets_sqrt_size_bound(int k, long long n, long long m) {
    if (k < 1)
        throw invalid_input("k must be positive");
    QuadSurd rhs(Rational(n) * (Rational(k) - Rational(1, 38)), Rational(13 * n, 190), k);
    return QuadSurd::rational(2 * m, k) >= rhs;
}

bool meets_two_degenerate_size_bound(long long n, long long m) { return 10 * m >= 27 * n - 35; }

bool within_min_cut_edge_budget(int k, long long n, long long m) { return 2 * m <= (k + 3LL) * n + (k - 1); }

bool check_min_degree(const Graph& g, int k) { return g.order() == 0 || g.min_degree() >= k + 2; }

std::string_view to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::holds:
        return "holds";
    case ClaimStatus::vacuous:
        return "vacuous";
    case ClaimStatus::violated:
        return "violated";
    }
    return "?";
}

ClaimReport check_large_neighbour_property(const Graph& g, int k) {
    if (k < 1)
        throw invalid_input("k must be positive");
    const QuadSurd threshold(k, Rational(1, 5), k);
    const QuadSurd needed(Rational(k) - Rational(2 * k, 25), Rational(-2, 5), k);

    ClaimReport report;
    for (int u = 0; u < g.order(); ++u) {
        if (QuadSurd::rational(g.degree(u), k) > threshold)
            continue;
        ++report.qualifying;
        int large = 0;
        g.neighbors(u).for_each([&](int v) {
            if (QuadSurd::rational(g.degree(v), k) >= threshold)
                ++large;
        });
        if (!report.witness && QuadSurd::rational(large, k) < needed) {
            report.witness = u;
            report.detail = "vertex " + std::to_string(u) + " of degree " + std::to_string(g.degree(u)) + " has " +
                            std::to_string(large) + " large-degree neighbours, needs " + needed.to_string();
        }
    }
    report.status = report.witness ? ClaimStatus::violated
                                   : (report.qualifying == 0 ? ClaimStatus::vacuous : ClaimStatus::holds);
    return report;
}

ClaimReport check_neighbour_degree_sum(const Graph& g) {
    ClaimReport report;
    for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) != 5)
            continue;
        ++report.qualifying;
        int sum = 0;
        g.neighbors(u).for_each([&](int v) { sum += g.degree(v); });
        if (!report.witness && sum < 29) {
            report.witness = u;
            report.detail = "vertex " + std::to_string(u) + " has neighbourhood degree sum " + std::to_string(sum);
        }
    }
    report.status = report.witness ? ClaimStatus::violated
                                   : (report.qualifying == 0 ? ClaimStatus::vacuous : ClaimStatus::holds);
    return report;
}

std::string_view statement_id(Statement s) {
    switch (s) {
    case Statement::sqrt_size_bound:
        return "thm1";
    case Statement::two_degenerate:
        return "thm2";
    case Statement::minimum_cut:
        return "thm3";
    case Statement::min_degree:
        return "mindeg";
    }
    return "?";
}

std::optional<Statement> parse_statement(std::string_view id) {
    for (auto s : {Statement::sqrt_size_bound, Statement::two_degenerate, Statement::minimum_cut, Statement::min_degree})
        if (statement_id(s) == id)
            return s;
    return std::nullopt;
}

namespace {

void check_parameters(Statement s, int k) {
    if (s == Statement::sqrt_size_bound && k < 1)
        throw invalid_input("thm1 needs k >= 1");
    if (s == Statement::minimum_cut && k < 2)
        throw invalid_input("thm3 needs k >= 2");
    if (s == Statement::min_degree && k < 0)
        throw invalid_input("mindeg needs k >= 0");
}

int effective_k(Statement s, int k) { return s == Statement::two_degenerate ? 2 : k; }

// Runs the full cut search; returns false when the hypothesis "no k-degenerate
// cut" fails or cannot be decided.
bool no_degenerate_cut(const Graph& g, int k, GraphVerdict& verdict) {
    auto search = find_degenerate_cut(g, k);
    if (search.outcome == SearchOutcome::budget_exceeded) {
        verdict.undecided = true;
        return false;
    }
    verdict.has_degenerate_cut = search.outcome == SearchOutcome::found;
    return !*verdict.has_degenerate_cut;
}

} // namespace

GraphVerdict check_statement(Statement s, int k, const Graph& g) {
    check_parameters(s, k);
    k = effective_k(s, k);
    const long long n = g.order();
    const long long m = g.size();
    GraphVerdict verdict;

    switch (s) {
    case Statement::sqrt_size_bound:
        if (n < 2LL * k + 2 || !no_degenerate_cut(g, k, verdict))
            return verdict;
        verdict.hypothesis = true;
        if (!meets_sqrt_size_bound(k, n, m))
            verdict.violation = "no " + std::to_string(k) + "-degenerate cut but m=" + std::to_string(m) +
                                " is below the sqrt size bound";
        return verdict;

    case Statement::two_degenerate:
        if (n < 5 || !no_degenerate_cut(g, 2, verdict))
            return verdict;
        verdict.hypothesis = true;
        if (!meets_two_degenerate_size_bound(n, m))
            verdict.violation = "no 2-degenerate cut but 10m=" + std::to_string(10 * m) + " < 27n-35=" +
                                std::to_string(27 * n - 35);
        return verdict;

    case Statement::minimum_cut:
        if (n < k + 6LL || !within_min_cut_edge_budget(k, n, m) || !is_connected(g))
            return verdict;
        verdict.hypothesis = true;
        if (g.is_complete()) {
            verdict.violation = "complete graph has no cut";
        } else if (find_min_degenerate_cut(g, k).outcome != SearchOutcome::found) {
            verdict.violation = "no minimum cut is " + std::to_string(k) + "-degenerate (2m=" + std::to_string(2 * m) +
                                " <= " + std::to_string((k + 3LL) * n + k - 1) + ")";
        }
        return verdict;

    case Statement::min_degree:
        if (n < k + 2LL || !no_degenerate_cut(g, k, verdict))
            return verdict;
        verdict.hypothesis = true;
        if (!check_min_degree(g, k))
            verdict.violation = "no " + std::to_string(k) + "-degenerate cut but minimum degree " +
                                std::to_string(g.min_degree()) + " < k+2";
        return verdict;
    }
    return verdict;
}

namespace {

// Dedup key: canonical graph6 for n <= 8, the string itself otherwise.
std::string violation_class(const std::string& graph6) {
    Graph g = parse_graph6(graph6);
    return g.order() <= max_iso_reject_order ? to_graph6(canonical_form(g)) : graph6;
}

void normalize_violations(std::vector<Violation>& violations) {
    std::map<std::string, Violation> best;
    for (auto& v : violations) {
        auto key = violation_class(v.graph6);
        auto it = best.find(key);
        if (it == best.end() || std::tie(v.graph6, v.reason) < std::tie(it->second.graph6, it->second.reason))
            best[key] = v;
    }
    violations.clear();
    for (auto& [key, v] : best)
        violations.push_back(std::move(v));
    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) { return std::tie(a.graph6, a.reason) < std::tie(b.graph6, b.reason); });
}

} // namespace

void VerificationReport::record(const Graph& g, const GraphVerdict& verdict) {
    ++scanned;
    n_min = n_min < 0 ? g.order() : std::min(n_min, g.order());
    n_max = std::max(n_max, g.order());
    if (verdict.hypothesis)
        ++hypothesis_hits;
    if (verdict.undecided)
        ++undecided;
    if (verdict.violation) {
        violations.push_back({to_graph6(g), *verdict.violation});
        normalize_violations(violations);
    }
}

void VerificationReport::merge(const VerificationReport& other) {
    if (other.n_min >= 0)
        n_min = n_min < 0 ? other.n_min : std::min(n_min, other.n_min);
    n_max = std::max(n_max, other.n_max);
    scanned += other.scanned;
    hypothesis_hits += other.hypothesis_hits;
    undecided += other.undecided;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    normalize_violations(violations);
    exhaustive = exhaustive && other.exhaustive;
    seconds += other.seconds;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json out;
    out["theorem"] = statement_id(statement);
    out["k"] = k;
    out["n_min"] = n_min < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(n_min);
    out["n_max"] = n_max < 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(n_max);
    out["scanned"] = scanned;
    out["hypothesis_hits"] = hypothesis_hits;
    out["undecided"] = undecided;
    out["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations)
        out["violations"].push_back({{"graph6", v.graph6}, {"reason", v.reason}});
    out["exhaustive"] = exhaustive;
    out["verdict"] = passed() ? "PASS" : "FAIL";
    out["seconds"] = std::round(seconds * 1000.0) / 1000.0;
    return out;
}

namespace {

VerificationReport empty_report(Statement s, int k) {
    VerificationReport r;
    r.statement = s;
    r.k = effective_k(s, k);
    return r;
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

VerificationReport verify_stream(Statement s, int k, const std::function<std::optional<Graph>()>& next,
                                 const VerifyObserver& observer) {
    check_parameters(s, k);
    auto start = std::chrono::steady_clock::now();
    VerificationReport report = empty_report(s, k);
    while (auto g = next()) {
        auto verdict = check_statement(s, k, *g);
        report.record(*g, verdict);
        if (observer)
            observer(*g, verdict);
    }
    report.seconds = elapsed(start);
    return report;
}

VerificationReport verify_enumeration(Statement s, int k, const EnumerationSpec& spec, int jobs,
                                      const VerifyObserver& observer) {
    check_parameters(s, k);
    spec.validate();
    auto start = std::chrono::steady_clock::now();

    int prefix = 0;
    if (jobs > 1)
        while ((1 << prefix) < 16 * jobs && prefix < spec.pair_count())
            ++prefix;
    auto parts = split_enumeration(spec, prefix);

    std::vector<VerificationReport> partial(parts.size(), empty_report(s, k));
    parallel_for(parts.size(), jobs, [&](std::size_t i) {
        for_each_labeled(
            spec,
            [&](const Graph& g) {
                auto verdict = check_statement(s, k, g);
                partial[i].record(g, verdict);
                if (observer)
                    observer(g, verdict);
            },
            parts[i]);
    });

    VerificationReport report = empty_report(s, k);
    report.exhaustive = true;
    for (auto& p : partial) {
        p.exhaustive = true;
        report.merge(p);
    }
    report.exhaustive = report.undecided == 0;
    report.seconds = elapsed(start);
    return report;
}

} // namespace degcut
