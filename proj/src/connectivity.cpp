#include "degcut/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

#include "degcut/degeneracy.hpp"
#include "degcut/errors.hpp"

namespace degcut {

namespace {

void check_subset(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw invalid_input("vertex set contains vertices outside the graph");
}

std::uint64_t reach_mask(const Graph& g, std::uint64_t alive, std::uint64_t start) {
    std::uint64_t seen = start, frontier = start;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f != 0; f &= f - 1)
            next |= g.row_word(std::countr_zero(f));
        frontier = next & alive & ~seen;
        seen |= frontier;
    }
    return seen;
}

// G[alive] has at least two components.
bool split_mask(const Graph& g, std::uint64_t alive) {
    if (std::popcount(alive) < 2)
        return false;
    return reach_mask(g, alive, alive & -alive) != alive;
}

bool split(const Graph& g, const VertexSet& alive) {
    if (g.order() <= 64)
        return split_mask(g, alive.word(0));
    return components_within(g, alive).size() >= 2;
}

/// Residual network of the node-split digraph: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
public:
    explicit SplitNetwork(const Graph& g) : head_(static_cast<std::size_t>(2 * g.order()), -1) {
        for (int v = 0; v < g.order(); ++v)
            add_arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, unbounded);
            add_arc(2 * v + 1, 2 * u, unbounded);
        }
        initial_ = cap_;
    }

    int max_flow(int source, int sink, int cap) {
        cap_ = initial_;
        const auto nodes = head_.size();
        std::vector<int> via(nodes);
        int flow = 0;
        while (flow < cap) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                int x = queue.front();
                queue.pop_front();
                for (int a = head_[x]; a >= 0; a = next_[a]) {
                    int y = to_[a];
                    if (cap_[a] > 0 && via[y] == -1) {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if (via[sink] == -1)
                break;
            for (int y = sink; y != source; y = to_[via[y] ^ 1]) {
                --cap_[via[y]];
                ++cap_[via[y] ^ 1];
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr int unbounded = std::numeric_limits<int>::max() / 4;

    void add_arc(int from, int to, int cap) {
        for (auto [x, y, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
            to_.push_back(y);
            cap_.push_back(c);
            next_.push_back(head_[x]);
            head_[x] = static_cast<int>(to_.size()) - 1;
        }
    }

    std::vector<int> head_;
    std::vector<int> to_;
    std::vector<int> cap_;
    std::vector<int> initial_;
    std::vector<int> next_;
};

// Lexicographic size-r subsets of {0..n-1} as word masks; visit returns false to stop.
template <class Visit>
bool combinations(int n, int r, int start, std::uint64_t chosen, Visit& visit) {
    if (r == 0)
        return visit(chosen);
    for (int v = start; v <= n - r; ++v)
        if (!combinations(n, r - 1, v + 1, chosen | (std::uint64_t{1} << v), visit))
            return false;
    return true;
}

} // namespace

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
    check_subset(g, alive);
    std::vector<VertexSet> parts;
    VertexSet rest = alive;
    while (!rest.empty()) {
        VertexSet part, frontier;
        frontier.insert(rest.first());
        part = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= rest;
            next -= part;
            part |= next;
            frontier = next;
        }
        rest -= part;
        parts.push_back(part);
    }
    return parts;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_cut(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    if (s.size() == g.order())
        throw invalid_input("a cut must leave at least one vertex");
    return split(g, g.vertices() - s);
}

bool is_bipartite_within(const Graph& g, const VertexSet& s) {
    check_subset(g, s);
    VertexSet uncoloured = s;
    while (!uncoloured.empty()) {
        VertexSet side[2];
        VertexSet frontier;
        frontier.insert(uncoloured.first());
        side[0] = frontier;
        for (int parity = 1; !frontier.empty(); parity ^= 1) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= s;
            if (next.intersects(side[parity ^ 1]))
                return false;
            next -= side[parity];
            side[parity] |= next;
            frontier = next;
        }
        uncoloured -= side[0];
        uncoloured -= side[1];
    }
    return true;
}

CutCertificate certify_cut(const Graph& g, const VertexSet& s) {
    if (!is_cut(g, s))
        throw invalid_input("vertex set is not a cut");
    CutCertificate cert;
    cert.cut = s;
    cert.components = components_within(g, g.vertices() - s);
    cert.cut_degeneracy = degeneracy_within(g, s);
    cert.independent = cert.cut_degeneracy == 0;
    cert.forest = cert.cut_degeneracy <= 1;
    cert.bipartite = is_bipartite_within(g, s);
    return cert;
}

int local_connectivity(const Graph& g, int x, int y, int cap) {
    if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || x == y || g.adjacent(x, y))
        throw invalid_input("local connectivity needs two distinct non-adjacent vertices");
    SplitNetwork net(g);
    return net.max_flow(2 * x + 1, 2 * y, cap);
}

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n < 2)
        throw invalid_input("vertex connectivity needs at least two vertices");
    if (g.is_complete())
        return n - 1;
    if (!is_connected(g))
        return 0;
    SplitNetwork net(g);
    int best = g.min_degree();
    // A minimum cut misses one of v_0..v_kappa; the first such vertex is
    // separated from some vertex of larger index.
    for (int i = 0; i <= best && i < n; ++i)
        for (int j = i + 1; j < n && best > 0; ++j)
            if (!g.adjacent(i, j))
                best = std::min(best, net.max_flow(2 * i + 1, 2 * j, best));
    return best;
}

int for_each_minimum_cut(const Graph& g, const std::function<bool(const VertexSet&)>& fn) {
    const int n = g.order();
    if (n > max_min_cut_order)
        throw invalid_input("minimum cut enumeration is limited to n <= 64");
    if (g.is_complete())
        throw no_cuts_exist();
    const int kappa = vertex_connectivity(g);
    const std::uint64_t all = VertexSet::range(n).word(0);

    auto visit = [&](std::uint64_t cut) {
        std::uint64_t rest = all & ~cut;
        // Every vertex of a minimum cut has a neighbour in each component of G - S.
        for (std::uint64_t c = cut; c != 0; c &= c - 1)
            if (std::popcount(g.row_word(std::countr_zero(c)) & rest) < 2)
                return true;
        if (!split_mask(g, rest))
            return true;
        return fn(VertexSet::from_word(cut));
    };
    combinations(n, kappa, 0, 0, visit);
    return kappa;
}

std::vector<CutCertificate> minimum_cuts(const Graph& g) {
    std::vector<CutCertificate> out;
    for_each_minimum_cut(g, [&](const VertexSet& s) {
        out.push_back(certify_cut(g, s));
        return true;
    });
    return out;
}

} // namespace degcut
