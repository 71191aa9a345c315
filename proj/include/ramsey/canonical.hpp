#ifndef RAMSEY_CANONICAL_HPP
#define RAMSEY_CANONICAL_HPP

#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Canonically relabeled copy of g: two graphs are isomorphic exactly when
/// their canonical graphs are equal. Components are canonicalized separately
/// and concatenated in a canonical component order; isolated vertices go last.
Graph canonical_graph(const Graph& g);

/// Canonical form as a byte string (graph6 of the canonical graph).
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace ramsey

#endif
