#ifndef DIVTOP_HOMOLOGY_HPP
#define DIVTOP_HOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "divtop/divisor_complexes.hpp"
#include "divtop/edge_paths.hpp"
#include "divtop/int_matrix.hpp"
#include "divtop/simplicial_complex.hpp"
#include "divtop/spanning_tree.hpp"

namespace divtop {

/**
 * Integer first homology of a 2-skeleton: H1 = Z^betti1 (+) Z/t1 (+) ...
 * with t1 | t2 | ... . Generator cycles are 1-chains in the canonical edge
 * order of the complex they came from; torsion generators precede free
 * ones. (Summaries produced from a bare group presentation carry no
 * cycles.)
 */
struct H1Summary {
    std::int64_t betti1 = 0;
    std::vector<std::int64_t> torsion;
    std::vector<std::vector<std::int64_t>> generator_cycles;

    bool same_group_as(const H1Summary& other) const {
        return betti1 == other.betti1 && torsion == other.torsion;
    }
    bool trivial() const { return betti1 == 0 && torsion.empty(); }
};

/**
 * Boundary matrices of the 2-skeleton in canonical simplex order:
 * d1 maps oriented edges to vertices, d2 maps oriented triangles to
 * edges (ascending-label orientation, alternating signs). d1 * d2 = 0.
 */
struct BoundaryMatrices {
    std::vector<Simplex> edges;
    std::vector<Simplex> triangles;
    IntMatrix d1; // vertices x edges
    IntMatrix d2; // edges x triangles
};

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex);

/**
 * Coordinate system for H1 classes of one connected complex. Built once,
 * then used to reduce arbitrary 1-cycles (or loops) to canonical
 * coordinates: one component per torsion factor (reduced mod t_i) and one
 * per free rank. Two cycles are homologous iff their coordinates agree.
 */
class H1Coordinates {
public:
    explicit H1Coordinates(const SimplicialComplex& complex);

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<Simplex>& edges() const { return edges_; }
    H1Summary summary() const;

    /** Number of canonical coordinates (torsion factors + free rank). */
    std::size_t coordinate_count() const { return coord_mod_.size(); }
    /** Modulus per coordinate (0 on free coordinates). */
    const std::vector<Wide>& coordinate_moduli() const { return coord_mod_; }

    /** 1-chain of a closed edge path, in canonical edge order. */
    std::vector<Wide> cycle_of_loop(const EdgePath& loop) const;

    /** Canonical H1 coordinates of a 1-cycle; throws if not a cycle. */
    std::vector<Wide> class_of_cycle(const std::vector<Wide>& cycle) const;
    std::vector<Wide> class_of_loop(const EdgePath& loop) const;

    bool classes_equal(const std::vector<Wide>& a, const std::vector<Wide>& b) const {
        return a == b;
    }
    bool class_trivial(const std::vector<Wide>& cls) const;

    /** Generating cycles, one per canonical coordinate (torsion first). */
    const std::vector<std::vector<Wide>>& generator_cycles() const { return generators_; }

private:
    std::vector<Wide> kernel_coordinates(const std::vector<Wide>& cycle) const;

    SimplicialComplex complex_;
    std::vector<Simplex> edges_;
    std::map<Edge, std::size_t> edge_index_;
    SNFResult snf_d1_;
    std::size_t cycle_rank_ = 0;     // nullity of d1
    SNFResult snf_q_;                // SNF of the cycle-space relation matrix
    std::vector<std::size_t> coord_rows_; // rows of U_q kept as coordinates
    std::vector<Wide> coord_mod_;         // 0 = free, t >= 2 = torsion
    std::vector<std::vector<Wide>> generators_;
};

/**
 * H1 of the 2-skeleton. Requires a nonempty connected complex; a
 * disconnected complex is rejected (analyze components separately).
 */
H1Summary h1(const SimplicialComplex& complex);

/**
 * The matrix of eta_* on first homology, the paper's main theorem in
 * machine-checkable form: rows are H1(D(X)) coordinates, columns the
 * images of the H1(G(X)) generator loops.
 */
struct InducedMapReport {
    H1Summary source; // H1(G(X))
    H1Summary target; // H1(D(X))
    IntMatrix matrix;
    bool surjective = false;
    bool isomorphism = false;
};

InducedMapReport induced_h1_map(const IntegerSet& x);

/**
 * An edge loop at the spanning-tree root whose 1-chain equals the given
 * cycle exactly, assembled from fundamental loops of the cotree edges.
 */
EdgePath loop_for_cycle(const SimplicialComplex& carrier, const SpanningTree& tree,
                        const std::vector<Simplex>& edges, const std::vector<Wide>& cycle);

} // namespace divtop

#endif
