#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "degcut/graph.hpp"
#include "degcut/quad_surd.hpp"

namespace degcut {

/// Degrees d with lower <= d < upper (no upper bound when `upper` is empty).
struct DegreeBucket {
    std::string name;
    QuadSurd lower;
    std::optional<QuadSurd> upper;

    bool contains(int degree) const;
};

/// Every vertex in bucket `from` sends `amount` along each edge to a neighbour
/// in bucket `to` (any neighbour when `to` is empty).
struct SendRule {
    std::size_t from = 0;
    std::optional<std::size_t> to;
    QuadSurd amount;
};

/// Local redistribution rules over degree buckets. All amounts live in
/// Q[sqrt radicand] and must be non-negative.
class DischargingScheme {
public:
    /// Throws config_error on negative amounts, bad bucket indices or a
    /// radicand mismatch.
    DischargingScheme(long long radicand, std::vector<DegreeBucket> buckets, std::vector<SendRule> rules);

    long long radicand() const { return radicand_; }
    const std::vector<DegreeBucket>& buckets() const { return buckets_; }
    const std::vector<SendRule>& rules() const { return rules_; }

    /// Index of the unique bucket holding `degree`. Throws config_error when
    /// no bucket or more than one bucket matches.
    std::size_t bucket_of(int degree) const;

private:
    long long radicand_;
    std::vector<DegreeBucket> buckets_;
    std::vector<SendRule> rules_;
};

/// Two buckets split at k + sqrt(k)/5; each large vertex sends 5/(38 sqrt k)
/// to each small neighbour.
DischargingScheme large_to_small_scheme(int k);

/// Buckets by exact degree 5, 6, 7, 8 and ">= 9"; a vertex of degree i in
/// 6..8 sends (i-5)/10 to every neighbour and one of degree >= 9 sends 2/5.
/// Degrees below 5 form a silent bucket so the scheme covers every graph.
DischargingScheme degree_excess_scheme();

/// Starts every vertex at its degree, applies every rule once along each
/// qualifying edge, and returns the final charges.
std::vector<QuadSurd> run_discharging(const Graph& g, const DischargingScheme& scheme);

} // namespace degcut
