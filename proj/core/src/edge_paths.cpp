#include "divtop/edge_paths.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace divtop {

namespace {

std::vector<Label> collapse_duplicates(std::vector<Label> seq) {
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    return seq;
}

[[noreturn]] void missing_edge(Label a, Label b) {
    std::ostringstream msg;
    msg << "no edge between " << a << " and " << b << " in the carrier complex";
    throw InputError(msg.str());
}

bool simplex_spans(const SimplicialComplex& carrier, std::initializer_list<Label> verts) {
    return carrier.contains_simplex(Simplex(std::vector<Label>(verts)));
}

} // namespace

EdgePath validate_path(const SimplicialComplex& carrier, std::vector<Label> sequence) {
    if (sequence.empty()) throw InputError("an edge path needs at least one vertex");
    sequence = collapse_duplicates(std::move(sequence));
    for (Label v : sequence) {
        if (!carrier.has_vertex(v)) {
            std::ostringstream msg;
            msg << "vertex " << v << " is not in the carrier complex";
            throw InputError(msg.str());
        }
    }
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
        if (!carrier.has_edge(sequence[i], sequence[i + 1])) {
            missing_edge(sequence[i], sequence[i + 1]);
        }
    }
    EdgePath path;
    path.vertices_ = std::move(sequence);
    return path;
}

EdgePath apply_move(const SimplicialComplex& carrier, const EdgePath& path,
                    const SimpleEquivalenceMove& move) {
    const std::vector<Label>& seq = path.vertices();
    std::vector<Label> next;

    if (move.kind == MoveKind::Contract) {
        if (move.position == 0 || move.position + 1 >= seq.size()) {
            throw InputError("contract position must be interior to the path");
        }
        if (seq[move.position] != move.witness) {
            throw InputError("contract witness does not match the vertex at its position");
        }
        if (!simplex_spans(carrier, {seq[move.position - 1], move.witness,
                                     seq[move.position + 1]})) {
            throw InputError("no simplex contains the three vertices");
        }
        next = seq;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(move.position));
    } else {
        if (path.is_constant()) {
            if (move.position != 1) throw InputError("expand position out of range");
            if (!simplex_spans(carrier, {seq[0], move.witness})) {
                throw InputError("no simplex contains the three vertices");
            }
            next = {seq[0], move.witness, seq[0]};
        } else {
            if (move.position == 0 || move.position >= seq.size()) {
                throw InputError("expand position out of range");
            }
            if (!simplex_spans(carrier, {seq[move.position - 1], move.witness,
                                         seq[move.position]})) {
                throw InputError("no simplex contains the three vertices");
            }
            next = seq;
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(move.position),
                        move.witness);
        }
    }
    return validate_path(carrier, std::move(next));
}

namespace {

Label smallest_prime_of_gcd(Label u, Label v) {
    PrimeSet support = factorize(std::gcd(u, v));
    if (support.empty()) missing_edge(u, v);
    return support.primes().front();
}

Label checked_edge_prime(const PrimeChoice& choice, Label u, Label v) {
    if (!choice.for_edge) return smallest_prime_of_gcd(u, v);
    Label p = choice.for_edge(u, v);
    if (!is_prime(p) || u % p != 0 || v % p != 0) {
        throw InputError("prime choice function returned a value outside the edge image");
    }
    return p;
}

Label checked_vertex_prime(const PrimeChoice& choice, Label v) {
    if (!choice.for_vertex) return factorize(v).primes().front();
    Label p = choice.for_vertex(v);
    if (!is_prime(p) || v % p != 0) {
        throw InputError("prime choice function returned a non-divisor of the vertex");
    }
    return p;
}

Label checked_edge_multiple(const IntegerSet& x, const MultipleChoice& choice, Label p,
                            Label q) {
    Label chosen = choice.for_edge ? choice.for_edge(p, q) : x.smallest_common_multiple(p, q);
    if (chosen == 0) {
        std::ostringstream msg;
        msg << "no member of X* is divisible by both " << p << " and " << q;
        throw InputError(msg.str());
    }
    if (chosen % p != 0 || chosen % q != 0 ||
        !std::binary_search(x.star().begin(), x.star().end(), chosen)) {
        throw InputError("multiple choice function returned a value outside X*");
    }
    return chosen;
}

Label checked_vertex_multiple(const IntegerSet& x, const MultipleChoice& choice, Label p) {
    Label chosen = choice.for_vertex ? choice.for_vertex(p) : x.smallest_multiple(p);
    if (chosen == 0 || chosen % p != 0 ||
        !std::binary_search(x.star().begin(), x.star().end(), chosen)) {
        throw InputError("multiple choice function returned a value outside X*");
    }
    return chosen;
}

} // namespace

EdgePath eta_star(const IntegerSet& x, const EdgePath& path, const PrimeChoice& choice) {
    const EdgePath validated = validate_path(build_common(x), path.vertices());
    const std::vector<Label>& v = validated.vertices();
    const SimplicialComplex d = build_prime(x);

    if (validated.is_constant()) {
        return validate_path(d, {checked_vertex_prime(choice, v[0])});
    }
    std::vector<Label> image;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        image.push_back(checked_edge_prime(choice, v[i], v[i + 1]));
    }
    // terminal point: repeat the initial choice on loops, else a prime of v_n
    image.push_back(validated.is_loop() ? image.front()
                                        : checked_vertex_prime(choice, v.back()));
    return validate_path(d, std::move(image));
}

EdgePath eta_star_inverse(const IntegerSet& x, const EdgePath& path,
                          const MultipleChoice& choice) {
    const EdgePath validated = validate_path(build_prime(x), path.vertices());
    const std::vector<Label>& p = validated.vertices();
    const SimplicialComplex g = build_common(x);

    if (validated.is_constant()) {
        return validate_path(g, {checked_vertex_multiple(x, choice, p[0])});
    }
    std::vector<Label> image;
    image.push_back(checked_vertex_multiple(x, choice, p[0]));
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        image.push_back(checked_edge_multiple(x, choice, p[i - 1], p[i]));
    }
    image.push_back(checked_edge_multiple(x, choice, p[p.size() - 2], p.back()));
    // on loops, return to the initial choice; the hop stays inside the
    // simplex of elements divisible by the base prime, so it is always an
    // edge and the homology class survives the closing
    if (validated.is_loop()) image.push_back(image.front());
    return validate_path(g, std::move(image));
}

namespace {

std::vector<std::vector<Label>> move_neighbors(const SimplicialComplex& carrier,
                                               const std::vector<Label>& state) {
    std::vector<std::vector<Label>> out;
    if (state.size() == 1) {
        for (Label w : carrier.neighbors(state[0])) {
            out.push_back({state[0], w, state[0]});
        }
        return out;
    }
    // contractions of the interior vertex at i
    for (std::size_t i = 1; i + 1 < state.size(); ++i) {
        if (!simplex_spans(carrier, {state[i - 1], state[i], state[i + 1]})) continue;
        std::vector<Label> next = state;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(collapse_duplicates(std::move(next)));
    }
    // expansions between i-1 and i
    for (std::size_t i = 1; i < state.size(); ++i) {
        for (Label w : carrier.vertices()) {
            if (w == state[i - 1] || w == state[i]) continue;
            if (!simplex_spans(carrier, {state[i - 1], w, state[i]})) continue;
            std::vector<Label> next = state;
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(i), w);
            out.push_back(std::move(next));
        }
    }
    return out;
}

} // namespace

HomotopyVerdict homotopic_bounded(const SimplicialComplex& carrier, const EdgePath& from,
                                  const EdgePath& to, std::size_t max_len,
                                  std::size_t max_steps) {
    if (!from.is_loop() || !to.is_loop()) {
        throw InputError("homotopy search expects edge loops");
    }
    if (from.basepoint() != to.basepoint()) {
        throw InputError("loops do not share a basepoint");
    }
    const std::vector<Label>& goal = to.vertices();
    std::set<std::vector<Label>> visited;
    std::queue<std::vector<Label>> frontier;
    visited.insert(from.vertices());
    frontier.push(from.vertices());

    std::size_t steps = 0;
    while (!frontier.empty() && steps < max_steps) {
        std::vector<Label> state = std::move(frontier.front());
        frontier.pop();
        ++steps;
        if (state == goal) return HomotopyVerdict::Homotopic;
        for (std::vector<Label>& next : move_neighbors(carrier, state)) {
            if (next.size() > max_len) continue;
            if (visited.insert(next).second) frontier.push(std::move(next));
        }
    }
    return HomotopyVerdict::NotFound;
}

} // namespace divtop
