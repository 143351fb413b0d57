#include "divtop/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace divtop {

namespace {

std::int64_t narrow(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("homology coefficient exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex) {
    if (complex.empty()) throw InputError("boundary matrices undefined on empty complex");

    BoundaryMatrices out;
    const std::vector<Label>& vertices = complex.vertices();
    out.edges = complex.simplices_of_dimension(1);
    out.triangles = complex.simplices_of_dimension(2);

    std::map<Label, std::size_t> vertex_index;
    for (std::size_t i = 0; i < vertices.size(); ++i) vertex_index[vertices[i]] = i;
    std::map<Edge, std::size_t> edge_index;
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
        const auto& v = out.edges[i].vertices();
        edge_index[{v[0], v[1]}] = i;
    }

    out.d1 = IntMatrix(vertices.size(), out.edges.size());
    for (std::size_t j = 0; j < out.edges.size(); ++j) {
        const auto& v = out.edges[j].vertices();
        out.d1.at(vertex_index.at(v[0]), j) = -1;
        out.d1.at(vertex_index.at(v[1]), j) = 1;
    }

    out.d2 = IntMatrix(out.edges.size(), out.triangles.size());
    for (std::size_t j = 0; j < out.triangles.size(); ++j) {
        const auto& v = out.triangles[j].vertices();
        // d{a,b,c} = {b,c} - {a,c} + {a,b}
        out.d2.at(edge_index.at({v[1], v[2]}), j) = 1;
        out.d2.at(edge_index.at({v[0], v[2]}), j) = -1;
        out.d2.at(edge_index.at({v[0], v[1]}), j) = 1;
    }
    return out;
}

H1Coordinates::H1Coordinates(const SimplicialComplex& complex) : complex_(complex) {
    if (complex_.empty()) throw InputError("homology undefined on empty complex");
    if (!complex_.is_connected()) {
        throw InputError("complex is disconnected: compute per component");
    }

    BoundaryMatrices boundaries = boundary_matrices(complex_);
    edges_ = std::move(boundaries.edges);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& v = edges_[i].vertices();
        edge_index_[{v[0], v[1]}] = i;
    }

    snf_d1_ = smith_normal_form(boundaries.d1);
    cycle_rank_ = edges_.size() - snf_d1_.rank;

    // express the triangle boundaries in the kernel basis of d1: the first
    // rank(d1) coordinates of V1^-1 * d2 vanish, the rest present H1
    IntMatrix lifted = multiply(snf_d1_.v_inv, boundaries.d2);
    IntMatrix q(cycle_rank_, boundaries.d2.cols());
    for (std::size_t r = 0; r < cycle_rank_; ++r) {
        for (std::size_t c = 0; c < q.cols(); ++c) {
            q.at(r, c) = lifted.at(snf_d1_.rank + r, c);
        }
    }
    for (std::size_t r = 0; r < snf_d1_.rank; ++r) {
        for (std::size_t c = 0; c < lifted.cols(); ++c) {
            if (lifted.at(r, c) != 0) {
                throw InvariantViolation("triangle boundary is not a 1-cycle");
            }
        }
    }
    snf_q_ = smith_normal_form(q);

    // canonical coordinates: drop unit factors, keep torsion then free
    for (std::size_t i = 0; i < cycle_rank_; ++i) {
        const Wide factor = i < snf_q_.rank ? snf_q_.d.at(i, i) : 0;
        if (factor == 1) continue;
        coord_rows_.push_back(i);
        coord_mod_.push_back(factor);
    }

    // one generator cycle per coordinate, lifted through both transforms
    for (std::size_t idx = 0; idx < coord_rows_.size(); ++idx) {
        std::vector<Wide> kernel_coords(cycle_rank_, 0);
        for (std::size_t r = 0; r < cycle_rank_; ++r) {
            kernel_coords[r] = snf_q_.u_inv.at(r, coord_rows_[idx]);
        }
        std::vector<Wide> cycle(edges_.size(), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            Wide sum = 0;
            for (std::size_t r = 0; r < cycle_rank_; ++r) {
                sum = checked_add(sum, checked_mul(snf_d1_.v.at(e, snf_d1_.rank + r),
                                                   kernel_coords[r]));
            }
            cycle[e] = sum;
        }
        generators_.push_back(std::move(cycle));
    }
}

H1Summary H1Coordinates::summary() const {
    H1Summary out;
    for (std::size_t i = 0; i < coord_mod_.size(); ++i) {
        if (coord_mod_[i] == 0) {
            ++out.betti1;
        } else {
            out.torsion.push_back(narrow(coord_mod_[i]));
        }
    }
    for (const auto& cycle : generators_) {
        std::vector<std::int64_t> chain;
        chain.reserve(cycle.size());
        for (Wide c : cycle) chain.push_back(narrow(c));
        out.generator_cycles.push_back(std::move(chain));
    }
    return out;
}

std::vector<Wide> H1Coordinates::cycle_of_loop(const EdgePath& loop) const {
    if (!loop.is_loop()) throw InputError("cycle extraction expects an edge loop");
    std::vector<Wide> chain(edges_.size(), 0);
    const std::vector<Label>& v = loop.vertices();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const Label a = v[i];
        const Label b = v[i + 1];
        const auto it = edge_index_.find({std::min(a, b), std::max(a, b)});
        if (it == edge_index_.end()) {
            std::ostringstream msg;
            msg << "loop uses edge " << a << "-" << b << " outside the complex";
            throw InputError(msg.str());
        }
        chain[it->second] = checked_add(chain[it->second], a < b ? 1 : -1);
    }
    return chain;
}

std::vector<Wide> H1Coordinates::kernel_coordinates(const std::vector<Wide>& cycle) const {
    if (cycle.size() != edges_.size()) {
        throw InputError("1-chain length does not match the edge count");
    }
    std::vector<Wide> coords(cycle_rank_, 0);
    for (std::size_t r = 0; r < snf_d1_.v_inv.rows(); ++r) {
        Wide sum = 0;
        for (std::size_t c = 0; c < edges_.size(); ++c) {
            sum = checked_add(sum, checked_mul(snf_d1_.v_inv.at(r, c), cycle[c]));
        }
        if (r < snf_d1_.rank) {
            if (sum != 0) throw InputError("1-chain has nonzero boundary");
        } else {
            coords[r - snf_d1_.rank] = sum;
        }
    }
    return coords;
}

std::vector<Wide> H1Coordinates::class_of_cycle(const std::vector<Wide>& cycle) const {
    std::vector<Wide> kernel_coords = kernel_coordinates(cycle);
    std::vector<Wide> cls(coord_rows_.size(), 0);
    for (std::size_t idx = 0; idx < coord_rows_.size(); ++idx) {
        Wide sum = 0;
        for (std::size_t c = 0; c < cycle_rank_; ++c) {
            sum = checked_add(sum, checked_mul(snf_q_.u.at(coord_rows_[idx], c),
                                               kernel_coords[c]));
        }
        if (coord_mod_[idx] != 0) {
            sum %= coord_mod_[idx];
            if (sum < 0) sum = checked_add(sum, coord_mod_[idx]);
        }
        cls[idx] = sum;
    }
    return cls;
}

std::vector<Wide> H1Coordinates::class_of_loop(const EdgePath& loop) const {
    return class_of_cycle(cycle_of_loop(loop));
}

bool H1Coordinates::class_trivial(const std::vector<Wide>& cls) const {
    return std::all_of(cls.begin(), cls.end(), [](Wide c) { return c == 0; });
}

H1Summary h1(const SimplicialComplex& complex) {
    return H1Coordinates(complex).summary();
}

EdgePath loop_for_cycle(const SimplicialComplex& carrier, const SpanningTree& tree,
                        const std::vector<Simplex>& edges, const std::vector<Wide>& cycle) {
    // the cotree coordinates of the cycle are exactly its coefficients in
    // the fundamental-cycle basis, so the loop is a product of fundamental
    // loops
    std::vector<Label> seq{tree.root()};
    for (const Edge& e : tree.cotree_edges()) {
        const auto it = std::find_if(edges.begin(), edges.end(), [&](const Simplex& s) {
            return s.vertices()[0] == e.first && s.vertices()[1] == e.second;
        });
        if (it == edges.end()) throw InvariantViolation("cotree edge missing from edge list");
        Wide coefficient = cycle[static_cast<std::size_t>(it - edges.begin())];
        if (coefficient == 0) continue;

        std::vector<Label> lap = tree.fundamental_loop(carrier, e).vertices();
        if (coefficient < 0) {
            std::reverse(lap.begin(), lap.end());
            coefficient = checked_neg(coefficient);
        }
        if (coefficient > 4096) {
            throw InvariantViolation("generator cycle coefficient unreasonably large");
        }
        for (Wide rep = 0; rep < coefficient; ++rep) {
            seq.insert(seq.end(), lap.begin() + 1, lap.end());
        }
    }
    return validate_path(carrier, std::move(seq));
}

InducedMapReport induced_h1_map(const IntegerSet& x) {
    SimplicialComplex g = build_common(x);
    SimplicialComplex d = build_prime(x);
    if (g.empty()) throw InputError("induced map undefined: X* is empty");
    if (!g.is_connected()) {
        throw InputError("complex is disconnected: compute per component");
    }
    if (!d.is_connected()) {
        throw InvariantViolation("G(X) connected but D(X) disconnected");
    }

    H1Coordinates source(g);
    H1Coordinates target(d);
    SpanningTree tree(g);

    InducedMapReport report;
    report.source = source.summary();
    report.target = target.summary();

    const std::size_t gen_count = source.generator_cycles().size();
    const std::size_t coords = target.coordinate_count();
    report.matrix = IntMatrix(coords, gen_count);
    for (std::size_t j = 0; j < gen_count; ++j) {
        EdgePath loop = loop_for_cycle(g, tree, source.edges(), source.generator_cycles()[j]);
        if (source.cycle_of_loop(loop) != source.generator_cycles()[j]) {
            throw InvariantViolation("generator loop does not realize its cycle");
        }
        EdgePath image = eta_star(x, loop);
        std::vector<Wide> cls = target.class_of_loop(image);
        for (std::size_t i = 0; i < coords; ++i) report.matrix.at(i, j) = cls[i];
    }

    // surjective iff the images together with the target relations span:
    // the stacked matrix [M | diag(moduli)] must have trivial cokernel
    IntMatrix stacked(coords, gen_count + coords);
    for (std::size_t i = 0; i < coords; ++i) {
        for (std::size_t j = 0; j < gen_count; ++j) {
            stacked.at(i, j) = report.matrix.at(i, j);
        }
        stacked.at(i, gen_count + i) = target.coordinate_moduli()[i];
    }
    SNFResult snf = smith_normal_form(stacked);
    const std::vector<Wide> factors = snf.invariant_factors();
    report.surjective = snf.rank == coords &&
                        std::all_of(factors.begin(), factors.end(),
                                    [](Wide f) { return f == 1; });
    report.isomorphism = report.surjective && report.source.same_group_as(report.target);
    return report;
}

} // namespace divtop
