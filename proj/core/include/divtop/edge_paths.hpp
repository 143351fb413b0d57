#ifndef DIVTOP_EDGE_PATHS_HPP
#define DIVTOP_EDGE_PATHS_HPP

#include <functional>
#include <vector>

#include "divtop/divisor_complexes.hpp"
#include "divtop/simplicial_complex.hpp"

namespace divtop {

/**
 * An edge path: a vertex sequence whose consecutive pairs are edges of its
 * carrier complex, with no consecutive repeats. A single vertex encodes the
 * constant path. A path whose first and last vertices agree is a loop; the
 * basepoint is the first vertex. Construct through validate_path.
 */
class EdgePath {
public:
    const std::vector<Label>& vertices() const { return vertices_; }
    /** Number of vertices in the sequence (a constant path has length 1). */
    std::size_t length() const { return vertices_.size(); }
    bool is_constant() const { return vertices_.size() == 1; }
    bool is_loop() const { return vertices_.front() == vertices_.back(); }
    Label basepoint() const { return vertices_.front(); }

    friend bool operator==(const EdgePath&, const EdgePath&) = default;

private:
    friend EdgePath validate_path(const SimplicialComplex&, std::vector<Label>);
    EdgePath() = default;
    std::vector<Label> vertices_;
};

/**
 * Collapses consecutive duplicate vertices, then checks that every
 * remaining consecutive pair is an edge of the carrier. Throws InputError
 * naming the offending pair (or vertex) otherwise.
 */
EdgePath validate_path(const SimplicialComplex& carrier, std::vector<Label> sequence);

enum class MoveKind { Expand, Contract };

/**
 * One simple-equivalence move. Contract removes the vertex at `position`
 * (which must equal `witness`); expand inserts `witness` between
 * position-1 and position. Either way a simplex of the carrier must
 * contain the three vertices involved. Expanding the constant path [b]
 * at position 1 yields [b, witness, b].
 */
struct SimpleEquivalenceMove {
    std::size_t position = 0;
    MoveKind kind = MoveKind::Contract;
    Label witness = 0;
};

EdgePath apply_move(const SimplicialComplex& carrier, const EdgePath& path,
                    const SimpleEquivalenceMove& move);

/**
 * Choice rules for the induced maps. The defaults are the canonical
 * deterministic choices (smallest prime, smallest multiple); tests swap in
 * randomized rules to confirm the homology class does not depend on them.
 */
struct PrimeChoice {
    /** Some prime dividing gcd(u, v); defaults to the smallest. */
    std::function<Label(Label u, Label v)> for_edge;
    /** Some prime dividing v; defaults to the smallest. */
    std::function<Label(Label v)> for_vertex;
};

struct MultipleChoice {
    /** Some member of X* divisible by both p and q; defaults to the smallest. */
    std::function<Label(Label p, Label q)> for_edge;
    /** Some member of X* divisible by p; defaults to the smallest. */
    std::function<Label(Label p)> for_vertex;
};

/**
 * The induced map on edge paths, G(X) -> D(X): one prime per edge, chosen
 * inside the edge's eta-image; the terminal vertex contributes a prime of
 * its own, except on loops where the terminal choice repeats the initial
 * one so the basepoint is preserved.
 */
EdgePath eta_star(const IntegerSet& x, const EdgePath& path, const PrimeChoice& choice = {});

/**
 * The inverse induced map, D(X) -> G(X): the start contributes a multiple
 * of its prime, every edge a common multiple of its two primes. Loops
 * close back at the starting choice after the final edge multiple; the
 * closing hop joins two multiples of the base prime, so it is always an
 * edge and round trips preserve the homology class.
 */
EdgePath eta_star_inverse(const IntegerSet& x, const EdgePath& path,
                          const MultipleChoice& choice = {});

enum class HomotopyVerdict { Homotopic, NotFound };

/**
 * Breadth-first search over simple-equivalence moves from `from`,
 * pruning sequences longer than max_len vertices and stopping after
 * max_steps node expansions. NotFound is inconclusive, never a
 * certificate of inequivalence. Both loops must share a basepoint.
 */
HomotopyVerdict homotopic_bounded(const SimplicialComplex& carrier, const EdgePath& from,
                                  const EdgePath& to, std::size_t max_len,
                                  std::size_t max_steps);

} // namespace divtop

#endif
