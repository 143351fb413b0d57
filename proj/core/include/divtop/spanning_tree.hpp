#ifndef DIVTOP_SPANNING_TREE_HPP
#define DIVTOP_SPANNING_TREE_HPP

#include <map>
#include <utility>
#include <vector>

#include "divtop/edge_paths.hpp"
#include "divtop/simplicial_complex.hpp"

namespace divtop {

using Edge = std::pair<Label, Label>; // ascending endpoints

/**
 * BFS spanning tree of a connected 1-skeleton, rooted at the smallest
 * vertex. Vertices are visited in ascending order, so the tree, the
 * cotree edge order, and every derived loop are deterministic.
 *
 * The fundamental loops of the cotree edges form a basis of the cycle
 * space: a loop's 1-chain is supported on its own cotree edge (with
 * coefficient one) and on tree edges only.
 */
class SpanningTree {
public:
    explicit SpanningTree(const SimplicialComplex& carrier);

    Label root() const { return root_; }
    const std::vector<Edge>& tree_edges() const { return tree_edges_; }
    const std::vector<Edge>& cotree_edges() const { return cotree_edges_; }
    bool is_tree_edge(Label a, Label b) const;

    /** Unique tree path from a to b, inclusive. */
    std::vector<Label> tree_path(Label a, Label b) const;

    /** Loop root -> a -> b -> root around the cotree edge (a, b). */
    EdgePath fundamental_loop(const SimplicialComplex& carrier, const Edge& cotree_edge) const;

private:
    std::vector<Label> path_to_root(Label v) const;

    Label root_ = 0;
    std::map<Label, Label> parent_;      // root maps to itself
    std::map<Label, std::size_t> depth_;
    std::vector<Edge> tree_edges_;
    std::vector<Edge> cotree_edges_;
};

} // namespace divtop

#endif
