#include "divtop/applications.hpp"

#include <algorithm>
#include <map>

#include "divtop/homology.hpp"

namespace divtop {

std::int64_t property_pk(const IntegerSet& x) {
    if (x.star_empty()) throw InputError("property P_k undefined: X* is empty");
    // a k-subset with gcd > 1 is a k-subset of some S_p = {v : p | v},
    // so the first k with no such subset is max_p |S_p| + 1
    std::map<Label, std::int64_t> support_count;
    std::int64_t largest = 0;
    for (Label v : x.star()) {
        const PrimeSet support = factorize(v);
        for (Label p : support.primes()) {
            largest = std::max(largest, ++support_count[p]);
        }
    }
    return largest + 1;
}

RankBoundReport rank_bound_report(const IntegerSet& x) {
    SimplicialComplex g = build_common(x);
    if (g.empty()) throw InputError("rank bound undefined: X* is empty");
    if (!g.is_connected()) {
        throw InputError("rank bound requires a connected common divisor complex");
    }

    RankBoundReport report;
    report.k = property_pk(x);
    report.dim_g = g.dimension();
    report.dimension_identity = report.k == report.dim_g + 2;
    report.bound = report.k * report.k - 3 * report.k + 1;
    report.betti1 = h1(g).betti1;
    report.applicable = report.k >= 3;
    report.satisfied = report.betti1 <= report.bound;
    return report;
}

PGroupShortcut p_group_shortcut(const IntegerSet& x) {
    if (x.star_empty()) throw InputError("p-group shortcut undefined: X* is empty");

    PGroupShortcut verdict;
    PrimeSet first = factorize(x.star().front());
    if (first.size() != 1) return verdict;
    const Label p = first.primes().front();
    for (Label v : x.star()) {
        PrimeSet support = factorize(v);
        if (support.size() != 1 || support.primes().front() != p) return verdict;
    }
    verdict.applies = true;
    verdict.prime = p;

    // the structural consequences are cheap to confirm outright
    SimplicialComplex g = build_common(x);
    SimplicialComplex d = build_prime(x);
    if (g.facets().size() != 1 || g.facets().front().size() != x.star().size()) {
        throw InvariantViolation("p-power set did not produce a single solid simplex");
    }
    if (d.vertex_count() != 1 || d.vertices().front() != p) {
        throw InvariantViolation("p-power set did not produce a single prime vertex");
    }
    return verdict;
}

} // namespace divtop
