#include "degcut/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "degcut/errors.hpp"

namespace degcut {

namespace {

constexpr int max_enumeration_order = 64;

struct Pair {
    int u;
    int v;
};

std::vector<Pair> pair_order(int n) {
    std::vector<Pair> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            pairs.push_back({u, v});
    return pairs;
}

bool rows_connected(const std::array<std::uint64_t, max_enumeration_order>& rows, int n) {
    if (n <= 1)
        return true;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
            next |= rows[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

class LabeledSearch {
public:
    LabeledSearch(const EnumerationSpec& spec, const EnumerationPartition& part,
                  const std::function<void(const Graph&)>* fn)
        : spec_(spec), part_(part), fn_(fn), pairs_(pair_order(spec.n)),
          min_degree_(spec.min_degree.value_or(0)), max_edges_(spec.edge_cap()) {
        rem_.fill(0);
        deg_.fill(0);
        rows_.fill(0);
        for (int v = 0; v < spec.n; ++v)
            rem_[v] = spec.n - 1;
        deficit_ = min_degree_ * spec.n;
    }

    std::uint64_t run() {
        if (deficit_ > 0 && (min_degree_ > spec_.n - 1 || (deficit_ + 1) / 2 > max_edges_))
            return 0;
        dfs(0);
        return emitted_;
    }

private:
    void dfs(int i) {
        const int total = static_cast<int>(pairs_.size());
        if (i == total) {
            leaf();
            return;
        }
        auto [a, b] = pairs_[i];
        --rem_[a];
        --rem_[b];

        const bool forced = i < part_.prefix_length;
        const bool forced_bit = forced && ((part_.prefix >> i) & 1);

        // absent
        if ((!forced || !forced_bit) && m_ + (total - i - 1) >= spec_.min_edges &&
            deg_[a] + rem_[a] >= min_degree_ && deg_[b] + rem_[b] >= min_degree_)
            dfs(i + 1);

        // present
        if ((!forced || forced_bit) && m_ + 1 <= max_edges_) {
            int relief = (deg_[a] < min_degree_ ? 1 : 0) + (deg_[b] < min_degree_ ? 1 : 0);
            if (m_ + 1 + (deficit_ - relief + 1) / 2 <= max_edges_) {
                add(a, b);
                deficit_ -= relief;
                dfs(i + 1);
                deficit_ += relief;
                remove(a, b);
            }
        }

        ++rem_[a];
        ++rem_[b];
    }

    void add(int a, int b) {
        rows_[a] |= std::uint64_t{1} << b;
        rows_[b] |= std::uint64_t{1} << a;
        ++deg_[a];
        ++deg_[b];
        ++m_;
    }

    void remove(int a, int b) {
        rows_[a] &= ~(std::uint64_t{1} << b);
        rows_[b] &= ~(std::uint64_t{1} << a);
        --deg_[a];
        --deg_[b];
        --m_;
    }

    void leaf() {
        if (m_ < spec_.min_edges)
            return;
        if (spec_.connected_only && !rows_connected(rows_, spec_.n))
            return;
        if (!fn_ && !spec_.iso_reject) {
            ++emitted_;
            return;
        }
        Graph g(spec_.n);
        for (int v = 0; v < spec_.n; ++v)
            for (std::uint64_t r = rows_[v] & ((std::uint64_t{1} << v) - 1); r != 0; r &= r - 1)
                g.add_edge(std::countr_zero(r), v);
        if (spec_.iso_reject && !is_canonical(g))
            return;
        ++emitted_;
        if (fn_)
            (*fn_)(g);
    }

    const EnumerationSpec& spec_;
    EnumerationPartition part_;
    const std::function<void(const Graph&)>* fn_;
    std::vector<Pair> pairs_;
    int min_degree_;
    int max_edges_;
    int m_ = 0;
    int deficit_ = 0; // sum over v of max(0, min_degree - deg v)
    std::uint64_t emitted_ = 0;
    std::array<int, max_enumeration_order> rem_{};
    std::array<int, max_enumeration_order> deg_{};
    std::array<std::uint64_t, max_enumeration_order> rows_{};
};

void check_partition(const EnumerationSpec& spec, const EnumerationPartition& part) {
    if (part.prefix_length < 0 || part.prefix_length > std::min(spec.pair_count(), 63))
        throw invalid_input("partition prefix longer than the edge decision sequence");
}

} // namespace

void EnumerationSpec::validate() const {
    if (n < 0 || n > max_enumeration_order)
        throw invalid_input("enumeration order " + std::to_string(n) + " outside 0..64");
    if (min_edges < 0 || min_edges > edge_cap() || edge_cap() > pair_count())
        throw invalid_input("edge range must satisfy 0 <= min <= max <= C(n,2)");
    if (min_degree && *min_degree < 0)
        throw invalid_input("negative minimum degree");
    if (iso_reject && n > max_iso_reject_order)
        throw invalid_input("isomorphism rejection is limited to n <= 8");
}

std::vector<EnumerationPartition> split_enumeration(const EnumerationSpec& spec, int prefix_length) {
    spec.validate();
    prefix_length = std::clamp(prefix_length, 0, std::min(spec.pair_count(), 20));
    std::vector<EnumerationPartition> parts;
    for (std::uint64_t p = 0; p < (std::uint64_t{1} << prefix_length); ++p) {
        // Bit i of the prefix is decision i; order parts so that concatenation
        // follows the depth-first emission order (absent before present).
        std::uint64_t reversed = 0;
        for (int i = 0; i < prefix_length; ++i)
            if ((p >> (prefix_length - 1 - i)) & 1)
                reversed |= std::uint64_t{1} << i;
        parts.push_back({prefix_length, reversed});
    }
    return parts;
}

void for_each_labeled(const EnumerationSpec& spec, const std::function<void(const Graph&)>& fn,
                      const EnumerationPartition& part) {
    spec.validate();
    check_partition(spec, part);
    LabeledSearch(spec, part, &fn).run();
}

std::uint64_t count_labeled(const EnumerationSpec& spec, const EnumerationPartition& part) {
    spec.validate();
    check_partition(spec, part);
    return LabeledSearch(spec, part, nullptr).run();
}

std::uint64_t adjacency_code(const Graph& g) {
    const int n = g.order();
    if (n > max_iso_reject_order + 3)
        throw invalid_input("adjacency code limited to n <= 11");
    std::uint64_t code = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            code = (code << 1) | (g.adjacent(u, v) ? 1 : 0);
    return code;
}

namespace {

void check_iso_order(const Graph& g) {
    if (g.order() > max_iso_reject_order)
        throw invalid_input("canonical form limited to n <= 8");
}

// Code of g under relabeling i -> perm[i], i.e. pair (i, j) reads adj(perm[i], perm[j]).
std::uint64_t permuted_code(const Graph& g, const std::array<int, max_iso_reject_order>& perm) {
    std::uint64_t code = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            code = (code << 1) | (g.adjacent(perm[u], perm[v]) ? 1 : 0);
    return code;
}

std::array<int, max_iso_reject_order> best_permutation(const Graph& g) {
    std::array<int, max_iso_reject_order> perm{};
    std::iota(perm.begin(), perm.begin() + g.order(), 0);
    auto best = perm;
    std::uint64_t best_code = permuted_code(g, perm);
    while (std::next_permutation(perm.begin(), perm.begin() + g.order())) {
        auto code = permuted_code(g, perm);
        if (code < best_code) {
            best_code = code;
            best = perm;
        }
    }
    return best;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    check_iso_order(g);
    return permuted_code(g, best_permutation(g));
}

bool is_canonical(const Graph& g) {
    check_iso_order(g);
    const int n = g.order();
    std::array<int, max_iso_reject_order> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    // Sign of (relabeled code - own code), decided at the most significant differing pair.
    auto relabeled_vs_own = [&] {
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                bool mine = g.adjacent(u, v);
                bool theirs = g.adjacent(perm[u], perm[v]);
                if (mine != theirs)
                    return theirs ? 1 : -1;
            }
        return 0;
    };
    while (std::next_permutation(perm.begin(), perm.begin() + n))
        if (relabeled_vs_own() < 0)
            return false;
    return true;
}

Graph canonical_form(const Graph& g) {
    check_iso_order(g);
    auto perm = best_permutation(g);
    Graph h(g.order());
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.adjacent(perm[u], perm[v]))
                h.add_edge(u, v);
    return h;
}

} // namespace degcut
