#include "divtop/presentation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace divtop {

GroupPresentation edge_path_group(const SimplicialComplex& complex) {
    SpanningTree tree(complex);

    GroupPresentation out;
    out.basepoint = tree.root();
    out.spanning_tree_edges = tree.tree_edges();
    out.generators = tree.cotree_edges();

    std::map<Edge, std::size_t> generator_index;
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
        generator_index[out.generators[i]] = i;
    }

    // a directed traversal u -> v contributes the generator of {u, v},
    // inverted when traversed against ascending orientation
    const auto letter = [&](Label u, Label v) -> std::optional<GeneratorRef> {
        Edge e{std::min(u, v), std::max(u, v)};
        const auto it = generator_index.find(e);
        if (it == generator_index.end()) return std::nullopt; // tree edge
        return GeneratorRef{it->second, u > v};
    };

    for (const Simplex& triangle : complex.simplices_of_dimension(2)) {
        const auto& v = triangle.vertices();
        RelatorWord word;
        const auto push = [&](Label a, Label b) {
            if (auto ref = letter(a, b)) {
                if (!word.empty() && word.back().index == ref->index &&
                    word.back().inverse != ref->inverse) {
                    word.pop_back(); // free reduction
                } else {
                    word.push_back(*ref);
                }
            }
        };
        // boundary loop a -> b -> c -> a
        push(v[0], v[1]);
        push(v[1], v[2]);
        push(v[2], v[0]);
        out.relators.push_back(std::move(word));
    }
    return out;
}

H1Summary abelianized_invariants(const GroupPresentation& presentation) {
    IntMatrix exponents(presentation.generators.size(), presentation.relators.size());
    for (std::size_t j = 0; j < presentation.relators.size(); ++j) {
        for (const GeneratorRef& ref : presentation.relators[j]) {
            Wide& cell = exponents.at(ref.index, j);
            cell = checked_add(cell, ref.inverse ? -1 : 1);
        }
    }
    SNFResult snf = smith_normal_form(exponents);

    H1Summary out;
    out.betti1 = static_cast<std::int64_t>(presentation.generators.size() - snf.rank);
    for (Wide f : snf.invariant_factors()) {
        if (f <= 1) continue;
        if (f > std::numeric_limits<std::int64_t>::max()) {
            throw OverflowError("torsion coefficient exceeds 64 bits");
        }
        out.torsion.push_back(static_cast<std::int64_t>(f));
    }
    return out;
}

std::string to_text(const GroupPresentation& presentation) {
    std::ostringstream out;
    const auto name = [&](std::size_t index) {
        const Edge& e = presentation.generators[index];
        std::ostringstream n;
        n << "e_{" << e.first << "," << e.second << "}";
        return n.str();
    };
    for (std::size_t i = 0; i < presentation.generators.size(); ++i) {
        out << "gen " << name(i) << "\n";
    }
    for (const RelatorWord& word : presentation.relators) {
        out << "rel";
        if (word.empty()) {
            out << " 1";
        } else {
            for (const GeneratorRef& ref : word) {
                out << " " << name(ref.index) << (ref.inverse ? "^-1" : "");
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace divtop
