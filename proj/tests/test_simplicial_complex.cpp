#include <doctest.h>

#include <set>

#include "divtop/fuzz.hpp"
#include "divtop/simplicial_complex.hpp"
#include "oracles.hpp"

using namespace divtop;

namespace {

// random complex on a handful of vertices, facet sizes up to 4
SimplicialComplex random_complex(SplitMix64& rng) {
    const std::size_t nverts = 2 + rng.below(6);
    std::set<Label> vertices;
    while (vertices.size() < nverts) vertices.insert(2 + static_cast<Label>(rng.below(40)));
    std::vector<Label> pool(vertices.begin(), vertices.end());
    std::vector<Simplex> candidates;
    const std::size_t nfacets = 1 + rng.below(5);
    for (std::size_t i = 0; i < nfacets; ++i) {
        std::vector<Label> verts;
        const std::size_t size = 1 + rng.below(4);
        for (std::size_t j = 0; j < size; ++j) verts.push_back(pool[rng.below(pool.size())]);
        candidates.emplace_back(std::move(verts));
    }
    return from_facets(vertices, candidates);
}

std::vector<std::pair<Label, Label>> edge_pairs(const SimplicialComplex& k) {
    std::vector<std::pair<Label, Label>> out;
    for (const Simplex& e : k.simplices_of_dimension(1)) {
        out.emplace_back(e.vertices()[0], e.vertices()[1]);
    }
    return out;
}

} // namespace

TEST_CASE("from_facets absorbs subsets and keeps isolated vertices") {
    SimplicialComplex k = from_facets({2, 4, 8}, {Simplex({2, 4, 8}), Simplex({2, 4})});
    REQUIRE(k.facets().size() == 1);
    CHECK(k.facets()[0].vertices() == std::vector<Label>{2, 4, 8});

    SimplicialComplex points = from_facets({2, 3}, {Simplex({2}), Simplex({3})});
    CHECK(points.facets().size() == 2);
    CHECK(points.dimension() == 0);

    SimplicialComplex isolated = from_facets({2, 3, 5}, {Simplex({2, 3})});
    REQUIRE(isolated.facets().size() == 2);
    CHECK(isolated.facets()[1].vertices() == std::vector<Label>{5});
}

TEST_CASE("from_facets rejects unknown vertices") {
    CHECK_THROWS_AS(from_facets({2, 3}, {Simplex({2, 5})}), InputError);
}

TEST_CASE("contains_simplex is subset-of-facet") {
    SimplicialComplex solid = from_facets({2, 4, 8}, {Simplex({2, 4, 8})});
    CHECK(solid.contains_simplex(Simplex({2, 8})));
    CHECK(solid.contains_simplex(Simplex({2, 4, 8})));
    CHECK_FALSE(solid.contains_simplex(Simplex({2, 5})));
}

TEST_CASE("downward closure holds exhaustively") {
    SplitMix64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        SimplicialComplex k = random_complex(rng);
        for (const Simplex& facet : k.facets()) {
            const auto& verts = facet.vertices();
            for (std::size_t mask = 1; mask < (std::size_t{1} << verts.size()); ++mask) {
                std::vector<Label> subset;
                for (std::size_t i = 0; i < verts.size(); ++i) {
                    if (mask & (std::size_t{1} << i)) subset.push_back(verts[i]);
                }
                CHECK(k.contains_simplex(Simplex(subset)));
            }
        }
    }
}

TEST_CASE("skeleton") {
    SimplicialComplex tetra = from_facets({2, 3, 5, 7}, {Simplex({2, 3, 5, 7})});
    SimplicialComplex two_skel = skeleton(tetra, 2);
    CHECK(two_skel.facets().size() == 4); // the four triangles
    CHECK(two_skel.dimension() == 2);

    SimplicialComplex zero_skel = skeleton(tetra, 0);
    CHECK(zero_skel.facets().size() == 4);
    CHECK(zero_skel.dimension() == 0);

    SimplicialComplex edge = from_facets({2, 11}, {Simplex({2, 11})});
    CHECK(skeleton(edge, 2) == edge);
}

TEST_CASE("skeleton composes by min") {
    SplitMix64 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex k = random_complex(rng);
        const int j = static_cast<int>(rng.below(4));
        const int l = static_cast<int>(rng.below(4));
        CHECK(skeleton(skeleton(k, j), l) == skeleton(k, std::min(j, l)));
    }
}

TEST_CASE("enumerate_simplices") {
    SimplicialComplex tetra = from_facets({2, 3, 5, 7}, {Simplex({2, 3, 5, 7})});
    CHECK(enumerate_simplices(tetra, 0).size() == 4);
    CHECK(enumerate_simplices(tetra, 1).size() == 6);
    CHECK(enumerate_simplices(tetra, 2).size() == 4);
    CHECK(enumerate_simplices(tetra, 3).size() == 1);
    CHECK(enumerate_simplices(tetra, 4).empty());

    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex k = random_complex(rng);
        CHECK(enumerate_simplices(k, 0).size() == k.vertex_count());
        CHECK(enumerate_simplices(k, k.dimension() + 1).empty());
    }
}

TEST_CASE("connectivity matches the union-find oracle") {
    SimplicialComplex one = from_facets({5}, {});
    CHECK(one.is_connected());

    SimplicialComplex two = from_facets({2, 3}, {});
    CHECK_FALSE(two.is_connected());
    CHECK(two.components().size() == 2);

    SimplicialComplex empty;
    CHECK_THROWS_WITH_AS(empty.is_connected(), "connectivity undefined on empty complex",
                         InputError);

    SplitMix64 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        SimplicialComplex k = random_complex(rng);
        CHECK(k.is_connected() == oracles::connected(k.vertices(), edge_pairs(k)));
    }
}

TEST_CASE("facets are canonical and deterministic") {
    SimplicialComplex a = from_facets({2, 3, 5}, {Simplex({3, 5}), Simplex({2, 3})});
    SimplicialComplex b = from_facets({2, 3, 5}, {Simplex({2, 3}), Simplex({5, 3})});
    CHECK(a == b);
    CHECK(a.facets()[0].vertices() == std::vector<Label>{2, 3});
}

TEST_CASE("simplex basics") {
    CHECK_THROWS_AS(Simplex({}), InputError);
    CHECK(Simplex({8, 2, 4, 2}).vertices() == std::vector<Label>{2, 4, 8});
    CHECK(Simplex({7}).dimension() == 0);
    CHECK(Simplex({2, 3}).is_face_of(Simplex({2, 3, 5})));
    CHECK_FALSE(Simplex({2, 7}).is_face_of(Simplex({2, 3, 5})));
}
