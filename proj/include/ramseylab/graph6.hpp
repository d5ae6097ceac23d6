#pragma once

#include <ramseylab/graph.hpp>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace ramseylab {

class FormatError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Strict graph6 decoding: rejects bad characters, wrong lengths and non-zero
/// padding bits. An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph & g);

/// Read-only sparse6 support (lines starting with ':').
Graph parse_sparse6(std::string_view text);

/// Dispatches on the leading character.
Graph parse_graph_line(std::string_view text);

/// One graph per non-empty line, graph6 or sparse6.
std::vector<Graph> read_graphs(std::istream & in);

}
