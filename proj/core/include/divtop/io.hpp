#ifndef DIVTOP_IO_HPP
#define DIVTOP_IO_HPP

#include <string>
#include <vector>

#include "divtop/divisor_complexes.hpp"
#include "divtop/simplicial_complex.hpp"

namespace divtop {

/**
 * Parses a list of positive integers from comma- or whitespace-separated
 * tokens, or from a JSON array when the text starts with '['. Values must
 * fit below 2^63; anything else is an InputError.
 */
std::vector<Label> parse_values(const std::string& text);

/**
 * Resolves a CLI input argument: a path to an existing file (one integer
 * per line, separators, or a JSON array) or an inline list.
 */
IntegerSet parse_input(const std::string& argument);

/**
 * The 1-skeleton as an undirected DOT graph, preceded by one comment line
 * per 2-simplex. Byte-deterministic.
 */
std::string export_dot(const SimplicialComplex& complex);

/** {edges, facets, triangles, vertices} as sorted JSON arrays. */
std::string export_json(const SimplicialComplex& complex);

} // namespace divtop

#endif
