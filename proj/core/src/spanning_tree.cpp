#include "divtop/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace divtop {

SpanningTree::SpanningTree(const SimplicialComplex& carrier) {
    if (!carrier.is_connected()) {
        throw InputError("spanning tree requires a connected complex");
    }
    root_ = carrier.vertices().front();
    parent_[root_] = root_;
    depth_[root_] = 0;
    std::queue<Label> frontier;
    frontier.push(root_);
    while (!frontier.empty()) {
        Label v = frontier.front();
        frontier.pop();
        for (Label u : carrier.neighbors(v)) {
            if (parent_.contains(u)) continue;
            parent_[u] = v;
            depth_[u] = depth_[v] + 1;
            tree_edges_.emplace_back(std::min(u, v), std::max(u, v));
            frontier.push(u);
        }
    }
    std::sort(tree_edges_.begin(), tree_edges_.end());

    for (const Simplex& edge : carrier.simplices_of_dimension(1)) {
        Edge e{edge.vertices()[0], edge.vertices()[1]};
        if (!std::binary_search(tree_edges_.begin(), tree_edges_.end(), e)) {
            cotree_edges_.push_back(e);
        }
    }
}

bool SpanningTree::is_tree_edge(Label a, Label b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(tree_edges_.begin(), tree_edges_.end(), e);
}

std::vector<Label> SpanningTree::path_to_root(Label v) const {
    std::vector<Label> path{v};
    while (path.back() != root_) path.push_back(parent_.at(path.back()));
    return path;
}

std::vector<Label> SpanningTree::tree_path(Label a, Label b) const {
    // climb both endpoints to their lowest common ancestor
    std::vector<Label> from_a{a};
    std::vector<Label> from_b{b};
    Label x = a;
    Label y = b;
    while (x != y) {
        if (depth_.at(x) >= depth_.at(y)) {
            x = parent_.at(x);
            from_a.push_back(x);
        } else {
            y = parent_.at(y);
            from_b.push_back(y);
        }
    }
    from_a.insert(from_a.end(), from_b.rbegin() + 1, from_b.rend());
    return from_a;
}

EdgePath SpanningTree::fundamental_loop(const SimplicialComplex& carrier,
                                        const Edge& cotree_edge) const {
    std::vector<Label> seq = tree_path(root_, cotree_edge.first);
    std::vector<Label> back = tree_path(cotree_edge.second, root_);
    seq.insert(seq.end(), back.begin(), back.end());
    return validate_path(carrier, std::move(seq));
}

} // namespace divtop
