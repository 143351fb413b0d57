#include "divtop/divisor_complexes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace divtop {

IntegerSet IntegerSet::from_values(std::vector<Label> values) {
    IntegerSet result;
    for (Label v : values) require_positive(v);
    result.raw_ = std::move(values);

    std::vector<Label> star;
    for (Label v : result.raw_) {
        if (v == 1) {
            ++result.ones_removed_;
        } else {
            star.push_back(v);
        }
    }
    std::sort(star.begin(), star.end());
    const std::size_t before = star.size();
    star.erase(std::unique(star.begin(), star.end()), star.end());
    result.duplicates_removed_ = before - star.size();
    result.star_ = std::move(star);
    return result;
}

Label IntegerSet::smallest_multiple(Label p) const {
    for (Label v : star_) {
        if (v % p == 0) return v;
    }
    return 0;
}

Label IntegerSet::smallest_common_multiple(Label p, Label q) const {
    for (Label v : star_) {
        if (v % p == 0 && v % q == 0) return v;
    }
    return 0;
}

SimplicialComplex build_common(const IntegerSet& x) {
    std::set<Label> vertices(x.star().begin(), x.star().end());
    // group X* by shared prime divisor: S_p = {v : p | v}
    std::map<Label, std::vector<Label>> by_prime;
    for (Label v : x.star()) {
        const PrimeSet support = factorize(v);
        for (Label p : support.primes()) by_prime[p].push_back(v);
    }
    std::vector<Simplex> candidates;
    for (auto& [p, members] : by_prime) candidates.emplace_back(std::move(members));
    return from_facets(vertices, candidates);
}

SimplicialComplex build_prime(const IntegerSet& x) {
    std::set<Label> vertices;
    std::vector<Simplex> candidates;
    for (Label v : x.star()) {
        PrimeSet support = factorize(v);
        vertices.insert(support.primes().begin(), support.primes().end());
        candidates.emplace_back(support.primes());
    }
    return from_facets(vertices, candidates);
}

EtaImage eta(const IntegerSet& x, const Simplex& sigma) {
    for (Label v : sigma.vertices()) {
        if (!std::binary_search(x.star().begin(), x.star().end(), v)) {
            std::ostringstream msg;
            msg << "not a simplex of the common divisor complex: vertex " << v
                << " is not in X*";
            throw InputError(msg.str());
        }
    }
    PrimeSet support = pi_of_set(sigma.vertices());
    if (support.empty()) {
        throw InputError("not a simplex of the common divisor complex: gcd is 1");
    }
    return EtaImage{sigma, Simplex(support.primes())};
}

namespace {

// all nonempty subsets of the facet's vertices, visited as bitmasks
template <typename Fn>
void for_each_subset(const std::vector<Label>& verts, Fn&& fn) {
    const std::size_t n = verts.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Label> sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) sub.push_back(verts[i]);
        }
        fn(std::move(sub));
    }
}

} // namespace

bool check_subset_reversal(const IntegerSet& x, std::size_t guard) {
    if (x.star().size() > guard) {
        std::ostringstream msg;
        msg << "subset reversal enumeration guard exceeded: |X*| = "
            << x.star().size() << " > " << guard;
        throw InputError(msg.str());
    }
    SimplicialComplex g = build_common(x);
    std::set<std::vector<Label>> seen;
    for (const Simplex& facet : g.facets()) {
        bool ok = true;
        for_each_subset(facet.vertices(), [&](std::vector<Label> outer) {
            if (!ok || !seen.insert(outer).second) return;
            Simplex sigma2{outer};
            EtaImage outer_image = eta(x, sigma2);
            for_each_subset(outer, [&](std::vector<Label> inner) {
                if (!ok) return;
                EtaImage inner_image = eta(x, Simplex{std::move(inner)});
                if (!outer_image.image.is_face_of(inner_image.image)) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

bool check_connectivity_theorem(const IntegerSet& x) {
    if (x.star_empty()) throw InputError("connectivity theorem undefined: X* is empty");
    return build_common(x).is_connected() == build_prime(x).is_connected();
}

bool check_near_surjectivity(const IntegerSet& x) {
    SimplicialComplex d = build_prime(x);
    for (Label p : d.vertices()) {
        bool covered = false;
        for (Label v : x.star()) {
            if (eta(x, Simplex({v})).image.contains_vertex(p)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    for (const Simplex& facet : d.facets()) {
        bool covered = false;
        for (Label v : x.star()) {
            if (facet.is_face_of(eta(x, Simplex({v})).image)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace divtop
