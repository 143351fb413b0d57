#include <doctest.h>

#include "divtop/fuzz.hpp"
#include "divtop/presentation.hpp"
#include "oracles.hpp"

using namespace divtop;

namespace {

IntegerSet paper_example() { return IntegerSet::from_values({22, 33, 65, 91, 210}); }

IntegerSet random_set(SplitMix64& rng) {
    std::vector<Label> values;
    const std::size_t n = 1 + rng.below(7);
    for (std::size_t i = 0; i < n; ++i) values.push_back(1 + rng.below(1000));
    return IntegerSet::from_values(values);
}

} // namespace

TEST_CASE("edge path group of basic complexes") {
    SimplicialComplex hollow =
        from_facets({2, 3, 5}, {Simplex({2, 3}), Simplex({3, 5}), Simplex({2, 5})});
    GroupPresentation free1 = edge_path_group(hollow);
    CHECK(free1.generators.size() == 1); // pi_1 = Z
    CHECK(free1.relators.empty());
    CHECK(free1.basepoint == 2);
    CHECK(free1.spanning_tree_edges.size() == 2);

    SimplicialComplex solid = from_facets({2, 3, 5}, {Simplex({2, 3, 5})});
    GroupPresentation trivial = edge_path_group(solid);
    CHECK(trivial.generators.size() == 1);
    REQUIRE(trivial.relators.size() == 1);
    CHECK(trivial.relators[0].size() == 1); // the relator kills the generator

    GroupPresentation bowtie = edge_path_group(build_common(paper_example()));
    CHECK(bowtie.generators.size() == 2); // free of rank 2
    CHECK(bowtie.relators.empty());

    CHECK_THROWS_AS(edge_path_group(from_facets({2, 3}, {})), InputError);
}

TEST_CASE("abelianized invariants") {
    GroupPresentation free2;
    free2.generators = {{2, 3}, {3, 5}};
    H1Summary a = abelianized_invariants(free2);
    CHECK(a.betti1 == 2);
    CHECK(a.torsion.empty());

    GroupPresentation z2; // <a | a^2>
    z2.generators = {{2, 3}};
    z2.relators = {{GeneratorRef{0, false}, GeneratorRef{0, false}}};
    H1Summary b = abelianized_invariants(z2);
    CHECK(b.betti1 == 0);
    CHECK(b.torsion == std::vector<std::int64_t>{2});

    H1Summary d_paper = abelianized_invariants(edge_path_group(build_prime(paper_example())));
    CHECK(d_paper.betti1 == 2);
    CHECK(d_paper.torsion.empty());
}

TEST_CASE("generator and relator counts") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        IntegerSet x = random_set(rng);
        if (x.star_empty()) continue;
        for (const SimplicialComplex& k : {build_common(x), build_prime(x)}) {
            if (!k.is_connected()) continue;
            GroupPresentation p = edge_path_group(k);
            const std::size_t edges = enumerate_simplices(k, 1).size();
            CHECK(p.generators.size() == edges - k.vertex_count() + 1);
            CHECK(p.relators.size() == enumerate_simplices(k, 2).size());
            CHECK(p.spanning_tree_edges.size() == k.vertex_count() - 1);
        }
    }
}

TEST_CASE("presentation abelianization equals homology") {
    SplitMix64 rng(72);
    for (int trial = 0; trial < 80; ++trial) {
        IntegerSet x = random_set(rng);
        if (x.star_empty()) continue;
        for (const SimplicialComplex& k : {build_common(x), build_prime(x)}) {
            if (!k.is_connected()) continue;
            CHECK(abelianized_invariants(edge_path_group(k)).same_group_as(h1(k)));
        }
    }
}

TEST_CASE("presentations are deterministic") {
    SimplicialComplex d = build_prime(paper_example());
    CHECK(to_text(edge_path_group(d)) == to_text(edge_path_group(d)));
}

TEST_CASE("presentation text form") {
    SimplicialComplex solid = from_facets({2, 3, 5}, {Simplex({2, 3, 5})});
    const std::string text = to_text(edge_path_group(solid));
    CHECK(text == "gen e_{3,5}\nrel e_{3,5}\n");

    GroupPresentation with_inverse;
    with_inverse.generators = {{2, 3}, {3, 5}};
    with_inverse.relators = {{GeneratorRef{0, false}, GeneratorRef{1, true}}, {}};
    CHECK(to_text(with_inverse) ==
          "gen e_{2,3}\ngen e_{3,5}\nrel e_{2,3} e_{3,5}^-1\nrel 1\n");
}
