#ifndef DIVTOP_PRESENTATION_HPP
#define DIVTOP_PRESENTATION_HPP

#include <string>
#include <vector>

#include "divtop/homology.hpp"
#include "divtop/simplicial_complex.hpp"
#include "divtop/spanning_tree.hpp"

namespace divtop {

/** One letter of a relator word: a generator index, possibly inverted. */
struct GeneratorRef {
    std::size_t index = 0;
    bool inverse = false;

    friend bool operator==(const GeneratorRef&, const GeneratorRef&) = default;
};

using RelatorWord = std::vector<GeneratorRef>;

/**
 * Presentation of the edge-path group of a connected 2-skeleton: one
 * generator per cotree edge, one relator per triangle (tree edges read as
 * the identity). No simplification is applied beyond free reduction; the
 * verification route is through the abelianization, not the word problem.
 */
struct GroupPresentation {
    std::vector<Edge> generators;
    std::vector<RelatorWord> relators;
    Label basepoint = 0;
    std::vector<Edge> spanning_tree_edges;
};

/** Deterministic edge-path group presentation. Throws on disconnected input. */
GroupPresentation edge_path_group(const SimplicialComplex& complex);

/**
 * Invariants of the abelianized presentation via the exponent-sum matrix:
 * betti and torsion of H1 computed through a pipeline independent of the
 * boundary-matrix route.
 */
H1Summary abelianized_invariants(const GroupPresentation& presentation);

/**
 * Text form, one line per item:
 *   gen e_{a,b}
 *   rel e_{a,b} e_{c,d}^-1 ...
 * An empty relator word prints as "1".
 */
std::string to_text(const GroupPresentation& presentation);

} // namespace divtop

#endif
