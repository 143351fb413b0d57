#ifndef DIVTOP_SIMPLICIAL_COMPLEX_HPP
#define DIVTOP_SIMPLICIAL_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "divtop/number_theory.hpp"

namespace divtop {

/**
 * A nonempty set of vertices, stored strictly ascending. Dimension is
 * |vertices| - 1. Faces are subsets.
 */
class Simplex {
public:
    /** Sorts and deduplicates; throws InputError on an empty vertex list. */
    explicit Simplex(std::vector<Label> vertices);

    const std::vector<Label>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool contains_vertex(Label v) const;
    bool is_face_of(const Simplex& other) const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex& a, const Simplex& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    std::vector<Label> vertices_;
};

/**
 * Abstract simplicial complex in facet representation: the stored facets
 * are the inclusion-maximal simplices, and every subset of a facet is
 * implicitly a simplex (downward closure). Immutable after construction.
 *
 * The empty complex is a legal value; connectivity and homology queries
 * reject it explicitly.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<Label>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool empty() const { return vertices_.empty(); }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool has_vertex(Label v) const;

    /** Max facet dimension; -1 for the empty complex. */
    int dimension() const;

    /** True iff s is a subset of some facet. */
    bool contains_simplex(const Simplex& s) const;
    bool has_edge(Label a, Label b) const;

    /** All k-dimensional simplices, canonically sorted, no duplicates. */
    std::vector<Simplex> simplices_of_dimension(int k) const;

    /** Neighbors of v in the 1-skeleton, ascending. */
    std::vector<Label> neighbors(Label v) const;

    /**
     * True iff the 1-skeleton is a single connected component covering
     * every vertex. Throws InputError on the empty complex.
     */
    bool is_connected() const;

    /**
     * Vertex sets of the connected components of the 1-skeleton, each
     * ascending, ordered by smallest member.
     */
    std::vector<std::vector<Label>> components() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    friend SimplicialComplex from_facets(const std::set<Label>&, const std::vector<Simplex>&);
    friend SimplicialComplex skeleton(const SimplicialComplex&, int);

    std::vector<Label> vertices_;   // ascending
    std::vector<Simplex> facets_;   // inclusion-maximal, lexicographic
};

/**
 * Builds a complex from candidate facets: drops duplicates and any
 * candidate contained in another, keeps isolated vertices as 0-facets.
 * A candidate naming a vertex outside `vertices` is an error.
 */
SimplicialComplex from_facets(const std::set<Label>& vertices,
                              const std::vector<Simplex>& candidate_facets);

/** The k-skeleton: simplices of dimension <= k, re-maximalized. */
SimplicialComplex skeleton(const SimplicialComplex& complex, int k);

std::vector<Simplex> enumerate_simplices(const SimplicialComplex& complex, int k);

} // namespace divtop

#endif
