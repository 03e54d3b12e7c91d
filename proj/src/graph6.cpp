#include "degcut/graph6.hpp"

#include <istream>

#include "degcut/errors.hpp"

namespace degcut {

namespace {

constexpr std::string_view header = ">>graph6<<";
constexpr long long max_graph6_order = 258047;

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw parse_error("truncated input", pos);
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw parse_error("byte " + std::to_string(c) + " outside 63..126", pos);
    return c - 63;
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (!text.empty() && text.back() == '\n')
        text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r')
        text.remove_suffix(1);

    std::size_t pos = text.starts_with(header) ? header.size() : 0;
    if (pos >= text.size())
        throw parse_error("empty graph6 line", pos);

    long long n = 0;
    if (text[pos] != '~') {
        n = sextet(text, pos++);
    } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
        pos += 2;
        for (int i = 0; i < 6; ++i)
            n = (n << 6) | sextet(text, pos++);
    } else {
        pos += 1;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | sextet(text, pos++);
    }
    if (n > max_vertices)
        throw parse_error("order " + std::to_string(n) + " exceeds capacity " + std::to_string(max_vertices), 0);

    Graph g(static_cast<int>(n));
    int bits_left = 0;
    int current = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (bits_left == 0) {
                current = sextet(text, pos++);
                bits_left = 6;
            }
            --bits_left;
            if ((current >> bits_left) & 1)
                g.add_edge(u, v);
        }
    }
    if ((current & ((1 << bits_left) - 1)) != 0)
        throw parse_error("nonzero padding bits", pos - 1);
    if (pos != text.size())
        throw parse_error("trailing bytes after adjacency payload", pos);
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > max_graph6_order)
        throw invalid_input("order too large for graph6");

    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }

    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::optional<Graph> Graph6Reader::next() {
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        if (!text.empty() && text.back() == '\r')
            text.pop_back();
        if (text.empty())
            continue;
        try {
            return parse_graph6(text);
        } catch (const parse_error& e) {
            throw parse_error(e.reason(), e.offset(), line_);
        }
    }
    return std::nullopt;
}

} // namespace degcut
