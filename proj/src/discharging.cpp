#include "degcut/discharging.hpp"

#include "degcut/errors.hpp"

namespace degcut {

bool DegreeBucket::contains(int degree) const {
    Rational d(degree);
    return lower <= d && (!upper || d < *upper);
}

DischargingScheme::DischargingScheme(long long radicand, std::vector<DegreeBucket> buckets, std::vector<SendRule> rules)
    : radicand_(radicand), buckets_(std::move(buckets)), rules_(std::move(rules)) {
    for (const auto& b : buckets_)
        if (b.lower.radicand() != radicand_ || (b.upper && b.upper->radicand() != radicand_))
            throw config_error("bucket " + b.name + " uses a different radicand");
    for (const auto& r : rules_) {
        if (r.from >= buckets_.size() || (r.to && *r.to >= buckets_.size()))
            throw config_error("send rule refers to a missing bucket");
        if (r.amount.radicand() != radicand_)
            throw config_error("send rule uses a different radicand");
        if (r.amount.sign() < 0)
            throw config_error("send rule amount is negative");
    }
}

std::size_t DischargingScheme::bucket_of(int degree) const {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (!buckets_[i].contains(degree))
            continue;
        if (hit)
            throw config_error("degree " + std::to_string(degree) + " lies in buckets " + buckets_[*hit].name +
                               " and " + buckets_[i].name);
        hit = i;
    }
    if (!hit)
        throw config_error("degree " + std::to_string(degree) + " is not covered by any bucket");
    return *hit;
}

DischargingScheme large_to_small_scheme(int k) {
    if (k < 1)
        throw invalid_input("k must be positive");
    const long long r = k;
    QuadSurd threshold(k, Rational(1, 5), r);
    std::vector<DegreeBucket> buckets{
        {"small", QuadSurd::rational(0, r), threshold},
        {"large", threshold, std::nullopt},
    };
    // 5 / (38 sqrt k) = (5 / (38 k)) sqrt k
    QuadSurd amount(0, Rational(5, 38LL * k), r);
    return DischargingScheme(r, std::move(buckets), {{1, 0, amount}});
}

DischargingScheme degree_excess_scheme() {
    const long long r = 2;
    auto at = [&](long long d) { return QuadSurd::rational(d, r); };
    std::vector<DegreeBucket> buckets{
        {"below5", at(0), at(5)}, {"deg5", at(5), at(6)}, {"deg6", at(6), at(7)},
        {"deg7", at(7), at(8)},   {"deg8", at(8), at(9)}, {"deg9+", at(9), std::nullopt},
    };
    std::vector<SendRule> rules;
    for (int i = 6; i <= 9; ++i)
        rules.push_back({static_cast<std::size_t>(i - 4), std::nullopt, QuadSurd::rational(Rational(i - 5, 10), r)});
    return DischargingScheme(r, std::move(buckets), std::move(rules));
}

std::vector<QuadSurd> run_discharging(const Graph& g, const DischargingScheme& scheme) {
    const long long r = scheme.radicand();
    std::vector<std::size_t> bucket(static_cast<std::size_t>(g.order()));
    std::vector<QuadSurd> charge;
    charge.reserve(bucket.size());
    for (int v = 0; v < g.order(); ++v) {
        bucket[v] = scheme.bucket_of(g.degree(v));
        charge.push_back(QuadSurd::rational(g.degree(v), r));
    }
    for (const auto& rule : scheme.rules()) {
        for (int v = 0; v < g.order(); ++v) {
            if (bucket[v] != rule.from)
                continue;
            g.neighbors(v).for_each([&](int w) {
                if (rule.to && bucket[w] != *rule.to)
                    return;
                charge[v] -= rule.amount;
                charge[w] += rule.amount;
            });
        }
    }
    return charge;
}

} // namespace degcut
