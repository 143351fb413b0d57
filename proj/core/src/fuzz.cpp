#include "divtop/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "divtop/applications.hpp"
#include "divtop/edge_paths.hpp"
#include "divtop/homology.hpp"
#include "divtop/presentation.hpp"
#include "divtop/spanning_tree.hpp"

namespace divtop {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
}

// exhaustive-subset oracle for P_k, independent of the prime-support route
std::int64_t pk_by_subsets(const std::vector<Label>& star) {
    const std::size_t n = star.size();
    for (std::int64_t k = 1;; ++k) {
        if (static_cast<std::size_t>(k) > n) return k; // vacuous
        bool all_coprime = true;
        std::vector<std::size_t> idx(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        while (all_coprime) {
            std::vector<Label> subset;
            for (std::size_t i : idx) subset.push_back(star[i]);
            if (gcd_set(subset) > 1) all_coprime = false;
            std::size_t i = idx.size();
            while (i > 0) {
                --i;
                if (idx[i] != i + n - idx.size()) break;
                if (i == 0) { i = idx.size(); break; }
            }
            if (i == idx.size()) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
        }
        if (all_coprime) return k;
    }
}

EdgePath random_loop(const SimplicialComplex& carrier, const SpanningTree& tree,
                     SplitMix64& rng) {
    const std::vector<Label>& vertices = carrier.vertices();
    Label start = vertices[rng.below(vertices.size())];
    std::vector<Label> seq{start};
    const std::size_t walk = 2 + rng.below(6);
    for (std::size_t i = 0; i < walk; ++i) {
        std::vector<Label> nbrs = carrier.neighbors(seq.back());
        if (nbrs.empty()) break;
        seq.push_back(nbrs[rng.below(nbrs.size())]);
    }
    std::vector<Label> home = tree.tree_path(seq.back(), start);
    seq.insert(seq.end(), home.begin() + 1, home.end());
    return validate_path(carrier, std::move(seq));
}

struct TrialReport {
    bool empty_star = false;
    bool connected = false;
    bool has_torsion = false;
    bool p_group_applies = false;
    std::size_t loops_common = 0;
    std::size_t loops_prime = 0;
    std::vector<std::string> check_failures; // names of failed checks

    bool subset_reversal = true;
    bool connectivity_equivalence = true;
    bool dimension_identity = true;
    bool near_surjectivity = true;
    bool h1_equality = true;
    bool induced_isomorphism = true;
    bool presentation_agreement = true;
    std::size_t roundtrip_common_fail = 0;
    std::size_t roundtrip_prime_fail = 0;
    bool p_group_triviality = true;
};

TrialReport run_trial(const FuzzConfig& config, std::uint64_t trial) {
    // separate stream from the one that drew the instance values
    SplitMix64 rng(trial_seed(config.seed, trial) ^ 0x5bf03635aca33867ULL);
    TrialReport report;
    IntegerSet x = IntegerSet::from_values(fuzz_instance(config, trial));
    if (x.star_empty()) {
        report.empty_star = true;
        return report;
    }
    const auto record = [&report](const char* name, bool ok, bool& flag) {
        if (!ok) {
            flag = false;
            report.check_failures.emplace_back(name);
        }
    };

    record("subset reversal", check_subset_reversal(x), report.subset_reversal);
    record("connectivity equivalence", check_connectivity_theorem(x),
           report.connectivity_equivalence);
    record("near-surjectivity", check_near_surjectivity(x), report.near_surjectivity);

    SimplicialComplex g = build_common(x);
    SimplicialComplex d = build_prime(x);
    record("dimension identity",
           property_pk(x) == g.dimension() + 2 && property_pk(x) == pk_by_subsets(x.star()),
           report.dimension_identity);

    PGroupShortcut shortcut = p_group_shortcut(x);
    report.p_group_applies = shortcut.applies;

    report.connected = g.is_connected();
    if (!report.connected) return report;

    H1Coordinates h1_g(g);
    H1Coordinates h1_d(d);
    const H1Summary sum_g = h1_g.summary();
    const H1Summary sum_d = h1_d.summary();
    report.has_torsion = !sum_g.torsion.empty() || !sum_d.torsion.empty();

    record("H1 equality", sum_g.same_group_as(sum_d), report.h1_equality);
    record("induced map isomorphism", induced_h1_map(x).isomorphism,
           report.induced_isomorphism);
    record("presentation vs homology",
           abelianized_invariants(edge_path_group(g)).same_group_as(sum_g) &&
               abelianized_invariants(edge_path_group(d)).same_group_as(sum_d),
           report.presentation_agreement);
    if (shortcut.applies) {
        record("p-group triviality", sum_g.trivial() && sum_d.trivial(),
               report.p_group_triviality);
    }

    SpanningTree tree_g(g);
    SpanningTree tree_d(d);
    for (std::size_t i = 0; i < config.loops_per_instance; ++i) {
        EdgePath loop = random_loop(g, tree_g, rng);
        EdgePath back = eta_star_inverse(x, eta_star(x, loop));
        ++report.loops_common;
        if (h1_g.class_of_loop(loop) != h1_g.class_of_loop(back)) {
            ++report.roundtrip_common_fail;
            report.check_failures.emplace_back("round trip via G");
        }
    }
    for (std::size_t i = 0; i < config.loops_per_instance; ++i) {
        EdgePath loop = random_loop(d, tree_d, rng);
        EdgePath back = eta_star(x, eta_star_inverse(x, loop));
        ++report.loops_prime;
        if (h1_d.class_of_loop(loop) != h1_d.class_of_loop(back)) {
            ++report.roundtrip_prime_fail;
            report.check_failures.emplace_back("round trip via D");
        }
    }
    return report;
}

void fold(CheckCounter& counter, bool ok) {
    if (ok) {
        ++counter.pass;
    } else {
        ++counter.fail;
    }
}

} // namespace

std::vector<Label> fuzz_instance(const FuzzConfig& config, std::uint64_t trial) {
    SplitMix64 rng(trial_seed(config.seed, trial));
    const std::size_t count = 1 + rng.below(config.max_elems);
    std::vector<Label> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        values.push_back(1 + static_cast<Label>(rng.below(static_cast<std::uint64_t>(config.max_value))));
    }
    return values;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
    std::vector<TrialReport> reports(config.trials);
    std::vector<std::string> errors(config.trials);

    const auto worker_body = [&](std::atomic<std::uint64_t>& cursor) {
        while (true) {
            const std::uint64_t t = cursor.fetch_add(1);
            if (t >= config.trials) break;
            try {
                reports[t] = run_trial(config, t);
            } catch (const std::exception& e) {
                errors[t] = e.what();
            }
        }
    };

    std::atomic<std::uint64_t> cursor{0};
    const unsigned jobs = std::max(1u, config.jobs);
    if (jobs == 1) {
        worker_body(cursor);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back([&] { worker_body(cursor); });
        }
        for (std::thread& th : pool) th.join();
    }

    FuzzSummary summary;
    summary.config = config;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const TrialReport& r = reports[t];
        const auto note_failure = [&](const std::string& what) {
            ++summary.failures;
            if (!summary.first_failing_trial) {
                summary.first_failing_trial = t;
                std::ostringstream msg;
                msg << what << " [trial " << t << ", instance seed "
                    << trial_seed(config.seed, t) << ", values";
                for (Label v : fuzz_instance(config, t)) msg << " " << v;
                msg << "]";
                summary.first_failure = msg.str();
            }
        };
        if (!errors[t].empty()) {
            note_failure("unexpected error: " + errors[t]);
            continue;
        }
        if (r.empty_star) {
            ++summary.empty_star;
            continue;
        }
        fold(summary.subset_reversal, r.subset_reversal);
        fold(summary.connectivity_equivalence, r.connectivity_equivalence);
        fold(summary.dimension_identity, r.dimension_identity);
        fold(summary.near_surjectivity, r.near_surjectivity);
        if (r.connected) {
            ++summary.connected;
            fold(summary.h1_equality, r.h1_equality);
            fold(summary.induced_isomorphism, r.induced_isomorphism);
            fold(summary.presentation_agreement, r.presentation_agreement);
            summary.roundtrip_common.pass += r.loops_common - r.roundtrip_common_fail;
            summary.roundtrip_common.fail += r.roundtrip_common_fail;
            summary.roundtrip_prime.pass += r.loops_prime - r.roundtrip_prime_fail;
            summary.roundtrip_prime.fail += r.roundtrip_prime_fail;
            if (r.p_group_applies) fold(summary.p_group_triviality, r.p_group_triviality);
            if (r.has_torsion) ++summary.torsion_instances;
        } else {
            ++summary.disconnected;
        }
        for (const std::string& name : r.check_failures) note_failure("check failed: " + name);
    }
    return summary;
}

std::string FuzzSummary::render() const {
    std::ostringstream out;
    const auto line = [&out](const char* name, const CheckCounter& c) {
        out << "  " << name << ": " << c.pass << " pass, " << c.fail << " fail\n";
    };
    out << "fuzz summary\n";
    out << "trials: " << config.trials << " (seed " << config.seed << ", max elems "
        << config.max_elems << ", max value " << config.max_value << ")\n";
    out << "empty star (skipped): " << empty_star << "\n";
    out << "connected instances: " << connected << "\n";
    out << "disconnected instances: " << disconnected << "\n";
    out << "checks:\n";
    line("subset reversal", subset_reversal);
    line("connectivity equivalence", connectivity_equivalence);
    line("dimension identity (k = n + 2)", dimension_identity);
    line("near-surjectivity", near_surjectivity);
    line("H1(G) = H1(D)", h1_equality);
    line("induced map isomorphism", induced_isomorphism);
    line("presentation vs homology", presentation_agreement);
    line("round trip via G loops", roundtrip_common);
    line("round trip via D loops", roundtrip_prime);
    line("p-group shortcut triviality", p_group_triviality);
    out << "instances with torsion: " << torsion_instances << "\n";
    out << "failures: " << failures << "\n";
    if (first_failing_trial) {
        out << "first failure: " << first_failure << "\n";
    }
    return out.str();
}

} // namespace divtop
