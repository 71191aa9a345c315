#ifndef RAMSEY_GRAPH6_HPP
#define RAMSEY_GRAPH6_HPP

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

struct MalformedGraph6 : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard graph6 encoding: N(n) header, then the upper triangle in column
/// order, 6 bits per character, offset 63, zero-padded.
std::string write_graph6(const Graph& g);

/// Strict decoder: rejects bad headers, vertex counts above 64, trailing
/// characters and nonzero padding bits, so parse/write round-trips exactly.
Graph parse_graph6(const std::string& text);

}  // namespace ramsey

#endif
