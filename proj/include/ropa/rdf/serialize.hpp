#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ropa/rdf/graph.hpp"

namespace ropa::rdf {

enum class Format { turtle, ntriples };

std::string_view to_string(Format f) noexcept;
// Accepts "turtle"/"ttl" and "ntriples"/"nt".
std::optional<Format> parse_format(std::string_view s) noexcept;

// Triples in canonical order with blank nodes relabeled b0, b1, ... in
// first-use order. Blank nodes are ordered by a structural signature of their
// surroundings, so the result does not depend on the input labels.
std::vector<Triple> canonical_triples(const Graph& graph);

// Deterministic text: canonical triple order, "\n" line ends, no trailing
// whitespace. N-Triples of an empty graph is the empty string. Turtle opens
// with one @prefix line per binding, sorted by prefix.
std::string serialize(const Graph& graph, Format format);

// Throws SyntaxError(syntax_error) with the line and column of the problem.
// Turtle support covers prefixes, base, 'a', ';' and ',' lists, blank node
// labels, [] property lists, all string forms, language tags, datatypes,
// numbers and booleans. Collections are rejected.
Graph parse(std::string_view text, Format format);

// Equal up to blank node relabeling, judged on canonical N-Triples.
bool isomorphic(const Graph& a, const Graph& b);

} // namespace ropa::rdf
