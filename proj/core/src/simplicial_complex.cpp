#include "divtop/simplicial_complex.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace divtop {

Simplex::Simplex(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InputError("a simplex needs at least one vertex");
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Simplex::contains_vertex(Label v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

bool SimplicialComplex::has_vertex(Label v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int SimplicialComplex::dimension() const {
    int dim = -1;
    for (const Simplex& f : facets_) dim = std::max(dim, f.dimension());
    return dim;
}

bool SimplicialComplex::contains_simplex(const Simplex& s) const {
    for (const Simplex& f : facets_) {
        if (s.is_face_of(f)) return true;
    }
    return false;
}

bool SimplicialComplex::has_edge(Label a, Label b) const {
    if (a == b) return false;
    return contains_simplex(Simplex({a, b}));
}

std::vector<Simplex> SimplicialComplex::simplices_of_dimension(int k) const {
    std::set<std::vector<Label>> out;
    if (k < 0) return {};
    const std::size_t want = static_cast<std::size_t>(k) + 1;
    for (const Simplex& f : facets_) {
        const std::vector<Label>& verts = f.vertices();
        if (verts.size() < want) continue;
        // enumerate (k+1)-subsets of the facet's vertex list
        std::vector<std::size_t> idx(want);
        for (std::size_t i = 0; i < want; ++i) idx[i] = i;
        while (true) {
            std::vector<Label> sub(want);
            for (std::size_t i = 0; i < want; ++i) sub[i] = verts[idx[i]];
            out.insert(std::move(sub));
            // next combination
            std::size_t i = want;
            while (i > 0) {
                --i;
                if (idx[i] != i + verts.size() - want) break;
                if (i == 0) { i = want; break; }
            }
            if (i == want) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < want; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::vector<Simplex> result;
    result.reserve(out.size());
    for (const auto& verts : out) result.emplace_back(verts);
    return result;
}

std::vector<Label> SimplicialComplex::neighbors(Label v) const {
    std::set<Label> out;
    for (const Simplex& f : facets_) {
        if (!f.contains_vertex(v)) continue;
        for (Label u : f.vertices()) {
            if (u != v) out.insert(u);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<std::vector<Label>> SimplicialComplex::components() const {
    std::set<Label> unseen(vertices_.begin(), vertices_.end());
    std::vector<std::vector<Label>> comps;
    while (!unseen.empty()) {
        Label start = *unseen.begin();
        std::vector<Label> comp;
        std::queue<Label> frontier;
        frontier.push(start);
        unseen.erase(start);
        while (!frontier.empty()) {
            Label v = frontier.front();
            frontier.pop();
            comp.push_back(v);
            for (Label u : neighbors(v)) {
                if (unseen.erase(u) > 0) frontier.push(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool SimplicialComplex::is_connected() const {
    if (empty()) throw InputError("connectivity undefined on empty complex");
    return components().size() == 1;
}

SimplicialComplex from_facets(const std::set<Label>& vertices,
                              const std::vector<Simplex>& candidate_facets) {
    for (const Simplex& c : candidate_facets) {
        for (Label v : c.vertices()) {
            if (!vertices.contains(v)) {
                std::ostringstream msg;
                msg << "facet references unknown vertex " << v;
                throw InputError(msg.str());
            }
        }
    }

    // keep only inclusion-maximal candidates
    std::set<Simplex> unique(candidate_facets.begin(), candidate_facets.end());
    std::vector<Simplex> maximal;
    for (const Simplex& c : unique) {
        bool absorbed = false;
        for (const Simplex& other : unique) {
            if (!(other == c) && c.is_face_of(other)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) maximal.push_back(c);
    }

    // vertices in no facet become 0-dimensional facets
    std::set<Label> covered;
    for (const Simplex& f : maximal) {
        covered.insert(f.vertices().begin(), f.vertices().end());
    }
    for (Label v : vertices) {
        if (!covered.contains(v)) maximal.push_back(Simplex({v}));
    }
    std::sort(maximal.begin(), maximal.end());

    SimplicialComplex complex;
    complex.vertices_.assign(vertices.begin(), vertices.end());
    complex.facets_ = std::move(maximal);
    return complex;
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int k) {
    if (k < 0) throw InputError("skeleton dimension must be >= 0");
    std::vector<Simplex> candidates;
    bool truncated = false;
    for (const Simplex& f : complex.facets()) {
        if (f.dimension() <= k) {
            candidates.push_back(f);
        } else {
            truncated = true;
        }
    }
    if (truncated) {
        // every k-simplex is a face of some facet; from_facets absorbs the
        // ones already covered by an untruncated facet
        for (Simplex& s : complex.simplices_of_dimension(k)) {
            candidates.push_back(std::move(s));
        }
    }
    std::set<Label> vertices(complex.vertices().begin(), complex.vertices().end());
    return from_facets(vertices, candidates);
}

std::vector<Simplex> enumerate_simplices(const SimplicialComplex& complex, int k) {
    if (k < 0) throw InputError("simplex dimension must be >= 0");
    return complex.simplices_of_dimension(k);
}

} // namespace divtop
