#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "degcut/graph.hpp"

namespace degcut {

/// Decode one graph6 line. A trailing newline and the optional ">>graph6<<"
/// header are accepted. Throws parse_error carrying the byte offset.
Graph parse_graph6(std::string_view text);

/// Encode g as graph6 without a trailing newline (short form for n <= 62).
std::string to_graph6(const Graph& g);

/// Streams graphs from newline-separated graph6 text, skipping blank lines.
/// Parse errors carry the 1-based line number.
class Graph6Reader {
public:
    explicit Graph6Reader(std::istream& in) : in_(in) {}

    std::optional<Graph> next();
    std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

} // namespace degcut
