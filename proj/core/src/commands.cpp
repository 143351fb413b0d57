#include "divtop/commands.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "divtop/applications.hpp"
#include "divtop/edge_paths.hpp"
#include "divtop/homology.hpp"
#include "divtop/io.hpp"
#include "divtop/presentation.hpp"

namespace divtop {

namespace {

using nlohmann::json;

std::string join(const std::vector<Label>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << " ";
        out << values[i];
    }
    return out.str();
}

std::string facet_text(const Simplex& f) {
    std::ostringstream out;
    out << "{";
    const auto& v = f.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ",";
        out << v[i];
    }
    out << "}";
    return out.str();
}

std::string torsion_text(const std::vector<std::int64_t>& torsion) {
    if (torsion.empty()) return "none";
    std::ostringstream out;
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (i > 0) out << " ";
        out << torsion[i];
    }
    return out.str();
}

std::int64_t narrow_entry(Wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("matrix entry exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(narrow_entry(m.at(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r > 0) out << "; ";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0) out << " ";
            out << to_string(m.at(r, c));
        }
    }
    out << "]";
    return out.str();
}

struct ComplexBlock {
    const char* title;
    SimplicialComplex complex;
    bool connected = false;
    std::size_t component_count = 0;
    bool has_h1 = false;
    H1Summary h1_summary;
    std::size_t generators = 0;
    std::size_t relators = 0;
};

ComplexBlock describe(const char* title, SimplicialComplex complex) {
    ComplexBlock block{title, std::move(complex)};
    block.component_count = block.complex.components().size();
    block.connected = block.component_count == 1;
    if (block.connected) {
        block.h1_summary = h1(block.complex);
        block.has_h1 = true;
        GroupPresentation p = edge_path_group(block.complex);
        block.generators = p.generators.size();
        block.relators = p.relators.size();
    }
    return block;
}

void render_block_text(std::ostringstream& out, const ComplexBlock& block) {
    const SimplicialComplex& k = block.complex;
    out << block.title << "\n";
    out << "  vertices (" << k.vertex_count() << "): " << join(k.vertices()) << "\n";
    out << "  facets (" << k.facets().size() << "):";
    for (const Simplex& f : k.facets()) out << " " << facet_text(f);
    out << "\n";
    out << "  dimension: " << k.dimension() << "\n";
    out << "  connected: " << (block.connected ? "yes" : "no") << "\n";
    if (block.connected) {
        out << "  betti1: " << block.h1_summary.betti1 << "\n";
        out << "  torsion: " << torsion_text(block.h1_summary.torsion) << "\n";
        out << "  presentation: " << block.generators << " generators, " << block.relators
            << " relators\n";
    } else {
        out << "  components: " << block.component_count << "\n";
    }
}

json block_json(const ComplexBlock& block) {
    json out;
    out["vertices"] = block.complex.vertices();
    json facets = json::array();
    for (const Simplex& f : block.complex.facets()) facets.push_back(f.vertices());
    out["facets"] = std::move(facets);
    out["dimension"] = block.complex.dimension();
    out["connected"] = block.connected;
    out["components"] = block.component_count;
    if (block.connected) {
        out["betti1"] = block.h1_summary.betti1;
        out["torsion"] = block.h1_summary.torsion;
        out["presentation"] = {{"generators", block.generators}, {"relators", block.relators}};
    }
    return out;
}

CommandResult analyze_single(const IntegerSet& x, bool as_json) {
    ComplexBlock g = describe("common divisor complex G(X)", build_common(x));
    ComplexBlock d = describe("prime divisor complex D(X)", build_prime(x));

    // tri-state: the exhaustive check is skipped past the enumeration guard
    std::optional<bool> subset_reversal;
    try {
        subset_reversal = check_subset_reversal(x);
    } catch (const InputError&) {
    }
    const bool near_surjectivity = check_near_surjectivity(x);
    const bool connectivity = check_connectivity_theorem(x);

    bool h1_equal = true;
    bool isomorphism = true;
    IntMatrix induced;
    const bool compare_groups = g.connected;
    if (compare_groups) {
        InducedMapReport report = induced_h1_map(x);
        h1_equal = report.source.same_group_as(report.target);
        isomorphism = report.isomorphism;
        induced = report.matrix;
    }

    const std::int64_t k = property_pk(x);
    const std::int64_t dim_g = g.complex.dimension();
    const bool identity = k == dim_g + 2;
    const std::int64_t bound = k * k - 3 * k + 1;
    const bool bound_applicable = g.connected && k >= 3;
    const bool satisfied = compare_groups && g.h1_summary.betti1 <= bound;

    const bool checks_passed =
        subset_reversal.value_or(true) && near_surjectivity && connectivity && identity &&
        (!compare_groups || (h1_equal && isomorphism));

    CommandResult result;
    result.exit_code = checks_passed ? 0 : 1;

    if (as_json) {
        json doc;
        doc["schema_version"] = 1;
        doc["input"] = {{"values", x.raw()},
                        {"star", x.star()},
                        {"ones_removed", x.ones_removed()},
                        {"duplicates_removed", x.duplicates_removed()}};
        doc["common_complex"] = block_json(g);
        doc["prime_complex"] = block_json(d);
        json eta_checks;
        if (subset_reversal) {
            eta_checks["subset_reversal"] = *subset_reversal;
        } else {
            eta_checks["subset_reversal"] = nullptr;
        }
        eta_checks["near_surjectivity"] = near_surjectivity;
        eta_checks["connectivity_equivalence"] = connectivity;
        doc["eta_checks"] = std::move(eta_checks);
        if (compare_groups) {
            doc["fundamental_group"] = {{"h1_equal", h1_equal},
                                        {"induced_matrix", matrix_json(induced)},
                                        {"isomorphism", isomorphism}};
        } else {
            doc["fundamental_group"] = nullptr;
        }
        json pk;
        pk["k"] = k;
        pk["dim_g"] = dim_g;
        pk["dimension_identity"] = identity;
        pk["bound"] = bound;
        pk["applicable"] = bound_applicable;
        if (bound_applicable) pk["satisfied"] = satisfied;
        doc["pk"] = std::move(pk);
        doc["checks_passed"] = checks_passed;
        result.output = doc.dump(2) + "\n";
        return result;
    }

    std::ostringstream out;
    out << "divisor complex analysis (schema 1)\n";
    out << "input (" << x.raw().size() << " values): " << join(x.raw()) << "\n";
    out << "X* (" << x.star().size() << " values): " << join(x.star()) << "\n";
    out << "normalization: removed " << x.ones_removed() << " ones, "
        << x.duplicates_removed() << " duplicates\n\n";
    render_block_text(out, g);
    out << "\n";
    render_block_text(out, d);
    out << "\n";
    out << "eta checks\n";
    out << "  subset reversal: "
        << (subset_reversal ? (*subset_reversal ? "pass" : "FAIL")
                            : "skipped (X* beyond enumeration guard)")
        << "\n";
    out << "  near-surjectivity: " << (near_surjectivity ? "pass" : "FAIL") << "\n";
    out << "  connectivity equivalence: " << (connectivity ? "pass" : "FAIL") << "\n\n";
    out << "fundamental group comparison\n";
    if (compare_groups) {
        out << "  H1(G) = H1(D): " << (h1_equal ? "pass" : "FAIL") << "\n";
        out << "  induced map matrix (" << induced.rows() << "x" << induced.cols()
            << "): " << matrix_text(induced) << "\n";
        out << "  eta_* isomorphism on H1: " << (isomorphism ? "pass" : "FAIL") << "\n";
    } else {
        out << "  skipped: G(X) is disconnected (" << g.component_count
            << " components); rerun with --per-component\n";
    }
    out << "\n";
    out << "property P_k\n";
    out << "  k: " << k << "\n";
    out << "  dim G(X): " << dim_g << "\n";
    out << "  k = n + 2: " << (identity ? "pass" : "FAIL") << "\n";
    out << "  rank bound k^2 - 3k + 1: " << bound << "\n";
    if (bound_applicable) {
        out << "  betti1 <= bound: " << (satisfied ? "yes" : "no") << "\n";
        if (!satisfied) {
            out << "  note: no solvable group with connected G(X) has this degree set\n";
        }
    } else {
        out << "  bound not applicable (requires k >= 3 and connected G(X))\n";
    }
    out << "\n";
    out << "result: " << (checks_passed ? "PASS" : "FAIL") << "\n";
    result.output = out.str();
    return result;
}

} // namespace

CommandResult cmd_analyze(const IntegerSet& x, const AnalyzeOptions& options) {
    if (x.star_empty()) {
        return {"X* is empty: every input value is 1 (or the input was empty)\n", 2};
    }
    if (!options.per_component) return analyze_single(x, options.json);

    std::vector<std::vector<Label>> parts = build_common(x).components();
    CommandResult result;
    json components = json::array();
    std::ostringstream out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        IntegerSet part = IntegerSet::from_values(parts[i]);
        CommandResult sub = analyze_single(part, options.json);
        result.exit_code = std::max(result.exit_code, sub.exit_code);
        if (options.json) {
            components.push_back(json::parse(sub.output));
        } else {
            out << "=== component " << (i + 1) << " of " << parts.size() << ": {"
                << join(parts[i]) << "} ===\n"
                << sub.output;
            if (i + 1 < parts.size()) out << "\n";
        }
    }
    if (options.json) {
        json doc;
        doc["schema_version"] = 1;
        doc["per_component"] = std::move(components);
        result.output = doc.dump(2) + "\n";
    } else {
        result.output = out.str();
    }
    return result;
}

CommandResult cmd_map_loop(const IntegerSet& x, const MapLoopOptions& options) {
    if (x.star_empty()) {
        return {"X* is empty: every input value is 1 (or the input was empty)\n", 2};
    }
    const SimplicialComplex carrier =
        options.inverse ? build_prime(x) : build_common(x);
    const SimplicialComplex target =
        options.inverse ? build_common(x) : build_prime(x);
    const char* carrier_name = options.inverse ? "D(X)" : "G(X)";
    const char* target_name = options.inverse ? "G(X)" : "D(X)";

    EdgePath loop = validate_path(carrier, options.loop);
    if (!loop.is_loop()) {
        return {"the vertex sequence is not a loop (first and last differ)\n", 2};
    }
    EdgePath image = options.inverse ? eta_star_inverse(x, loop) : eta_star(x, loop);
    EdgePath round_trip = options.inverse ? eta_star(x, image) : eta_star_inverse(x, image);

    bool compared = false;
    bool classes_equal = true;
    if (carrier.is_connected()) {
        H1Coordinates coords(carrier);
        classes_equal = coords.class_of_loop(loop) == coords.class_of_loop(round_trip);
        compared = true;
    }

    CommandResult result;
    result.exit_code = compared && !classes_equal ? 1 : 0;
    if (options.json) {
        json doc;
        doc["schema_version"] = 1;
        doc["direction"] = options.inverse ? "inverse" : "forward";
        doc["input_loop"] = loop.vertices();
        doc["image_loop"] = image.vertices();
        doc["round_trip_loop"] = round_trip.vertices();
        if (compared) {
            doc["h1_class_equal"] = classes_equal;
        } else {
            doc["h1_class_equal"] = nullptr;
        }
        result.output = doc.dump(2) + "\n";
        return result;
    }
    std::ostringstream out;
    out << "map-loop (" << (options.inverse ? "inverse" : "forward") << ")\n";
    out << "input loop in " << carrier_name << ": " << join(loop.vertices()) << "\n";
    out << "image loop in " << target_name << ": " << join(image.vertices()) << "\n";
    out << "round trip in " << carrier_name << ": " << join(round_trip.vertices()) << "\n";
    if (compared) {
        out << "H1 class of round trip vs original: "
            << (classes_equal ? "equal" : "DIFFERENT") << "\n";
    } else {
        out << "H1 class comparison skipped: " << carrier_name << " is disconnected\n";
    }
    result.output = out.str();
    return result;
}

CommandResult cmd_pk(const IntegerSet& x, bool as_json) {
    if (x.star_empty()) {
        return {"X* is empty: every input value is 1 (or the input was empty)\n", 2};
    }
    const std::int64_t k = property_pk(x);
    SimplicialComplex g = build_common(x);
    const std::int64_t dim_g = g.dimension();
    const bool identity = k == dim_g + 2;
    const bool connected = g.is_connected();

    std::optional<RankBoundReport> bound;
    if (connected) bound = rank_bound_report(x);

    CommandResult result;
    result.exit_code = identity ? 0 : 1;
    if (as_json) {
        json doc;
        doc["schema_version"] = 1;
        doc["star"] = x.star();
        doc["k"] = k;
        doc["dim_g"] = dim_g;
        doc["dimension_identity"] = identity;
        if (bound) {
            doc["bound"] = bound->bound;
            doc["betti1"] = bound->betti1;
            doc["applicable"] = bound->applicable;
            if (bound->applicable) doc["satisfied"] = bound->satisfied;
        } else {
            doc["bound"] = nullptr;
        }
        result.output = doc.dump(2) + "\n";
        return result;
    }
    std::ostringstream out;
    out << "property P_k report\n";
    out << "X*: " << join(x.star()) << "\n";
    out << "k (smallest with all k-subsets coprime): " << k << "\n";
    out << "dim G(X): " << dim_g << "\n";
    out << "k = n + 2: " << (identity ? "pass" : "FAIL") << "\n";
    if (bound) {
        out << "rank bound k^2 - 3k + 1: " << bound->bound << "\n";
        out << "betti1: " << bound->betti1 << "\n";
        if (bound->applicable) {
            out << "betti1 <= bound: " << (bound->satisfied ? "yes" : "no") << "\n";
            if (!bound->satisfied) {
                out << "note: no solvable group with connected G(X) has this degree set\n";
            }
        } else {
            out << "bound not applicable (requires k >= 3)\n";
        }
    } else {
        out << "rank bound not computed: G(X) is disconnected\n";
    }
    result.output = out.str();
    return result;
}

CommandResult cmd_export(const IntegerSet& x, ExportComplex which, ExportFormat format) {
    if (x.star_empty()) {
        return {"X* is empty: every input value is 1 (or the input was empty)\n", 2};
    }
    SimplicialComplex k = which == ExportComplex::Common ? build_common(x) : build_prime(x);
    CommandResult result;
    result.output = format == ExportFormat::Dot ? export_dot(k) : export_json(k);
    return result;
}

} // namespace divtop
