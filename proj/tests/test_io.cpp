#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "divtop/commands.hpp"
#include "divtop/fuzz.hpp"
#include "divtop/io.hpp"

using namespace divtop;

namespace {

IntegerSet paper_example() { return IntegerSet::from_values({22, 33, 65, 91, 210}); }

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(needle) != std::string::npos) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("parse_values accepts separators and JSON arrays") {
    CHECK(parse_values("22,33,65") == std::vector<Label>{22, 33, 65});
    CHECK(parse_values(" 22  33\n65 ") == std::vector<Label>{22, 33, 65});
    CHECK(parse_values("22, 33,\t65") == std::vector<Label>{22, 33, 65});
    CHECK(parse_values("[22, 33, 65]") == std::vector<Label>{22, 33, 65});

    CHECK_THROWS_AS(parse_values(""), InputError);
    CHECK_THROWS_AS(parse_values("12x"), InputError);
    CHECK_THROWS_AS(parse_values("0"), InputError);
    CHECK_THROWS_AS(parse_values("-4"), InputError);
    CHECK_THROWS_AS(parse_values("9223372036854775808"), InputError); // 2^63
    CHECK_THROWS_AS(parse_values("[1, \"two\"]"), InputError);
    CHECK_THROWS_AS(parse_values("[1, 2"), InputError);
    CHECK(parse_values("9223372036854775807") ==
          std::vector<Label>{9223372036854775807LL});
}

TEST_CASE("parse_input reads files and inline lists") {
    const std::string path = "divtop_test_input.txt";
    {
        std::ofstream out(path);
        out << "22\n33\n65\n91\n210\n";
    }
    IntegerSet from_file = parse_input(path);
    CHECK(from_file.star() == paper_example().star());
    std::remove(path.c_str());

    IntegerSet inline_set = parse_input("2 4 8");
    CHECK(inline_set.star() == std::vector<Label>{2, 4, 8});
}

TEST_CASE("export_dot") {
    const std::string dot = export_dot(build_prime(paper_example()));
    CHECK(count_lines_with(dot, "// triangle") == 4);
    CHECK(count_lines_with(dot, " -- ") == 10);
    CHECK(dot.starts_with("graph complex {"));
    CHECK(export_dot(build_prime(paper_example())) == dot); // byte stable

    const std::string single = export_dot(build_common(IntegerSet::from_values({30})));
    CHECK(count_lines_with(single, " -- ") == 0);
    CHECK(count_lines_with(single, "  30;") == 1);
}

TEST_CASE("export_json") {
    const std::string text = export_json(build_common(paper_example()));
    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc["vertices"].size() == 5);
    CHECK(doc["facets"].size() == 6);
    for (const auto& facet : doc["facets"]) CHECK(facet.size() == 2);
    CHECK(doc["edges"].size() == 6);
    CHECK(doc["triangles"].empty());
}

TEST_CASE("cmd_analyze golden run") {
    CommandResult result = cmd_analyze(paper_example());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("betti1: 2") != std::string::npos);
    CHECK(result.output.find("eta_* isomorphism on H1: pass") != std::string::npos);
    CHECK(result.output.find("result: PASS") != std::string::npos);

    // identical call, identical bytes
    CHECK(cmd_analyze(paper_example()).output == result.output);
}

TEST_CASE("cmd_analyze rejects an empty star set") {
    CommandResult result = cmd_analyze(IntegerSet::from_values({1}));
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("X* is empty") != std::string::npos);
}

TEST_CASE("cmd_analyze on a disconnected set") {
    CommandResult result = cmd_analyze(IntegerSet::from_values({2, 3}));
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("connected: no") != std::string::npos);
    CHECK(result.output.find("per-component") != std::string::npos);

    AnalyzeOptions per;
    per.per_component = true;
    CommandResult split = cmd_analyze(IntegerSet::from_values({2, 3}), per);
    CHECK(split.exit_code == 0);
    CHECK(split.output.find("component 1 of 2") != std::string::npos);
    CHECK(split.output.find("component 2 of 2") != std::string::npos);
}

TEST_CASE("cmd_analyze json schema") {
    AnalyzeOptions options;
    options.json = true;
    CommandResult result = cmd_analyze(paper_example(), options);
    CHECK(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.output);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["common_complex"]["betti1"] == 2);
    CHECK(doc["prime_complex"]["betti1"] == 2);
    CHECK(doc["fundamental_group"]["isomorphism"] == true);
    CHECK(doc["pk"]["k"] == 3);
    CHECK(doc["checks_passed"] == true);
}

TEST_CASE("cmd_map_loop") {
    MapLoopOptions options;
    options.loop = {22, 210, 33, 22};
    CommandResult result = cmd_map_loop(paper_example(), options);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("image loop in D(X): 2 3 11 2") != std::string::npos);
    CHECK(result.output.find("equal") != std::string::npos);

    MapLoopOptions bad;
    bad.loop = {22, 65, 22};
    CHECK_THROWS_WITH_AS(cmd_map_loop(paper_example(), bad),
                         "no edge between 22 and 65 in the carrier complex", InputError);
}

TEST_CASE("cmd_pk golden run") {
    CommandResult result = cmd_pk(paper_example());
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("k (smallest with all k-subsets coprime): 3") !=
          std::string::npos);
    CHECK(result.output.find("betti1 <= bound: no") != std::string::npos);
}

TEST_CASE("cmd_export") {
    CommandResult dot = cmd_export(paper_example(), ExportComplex::Prime, ExportFormat::Dot);
    CHECK(dot.exit_code == 0);
    CHECK(count_lines_with(dot.output, "// triangle") == 4);

    CommandResult js = cmd_export(paper_example(), ExportComplex::Common, ExportFormat::Json);
    CHECK(nlohmann::json::parse(js.output)["vertices"].size() == 5);
}

TEST_CASE("fuzz determinism and instance reproducibility") {
    FuzzConfig config;
    config.trials = 25;
    config.seed = 99;
    FuzzSummary first = run_fuzz(config);
    FuzzSummary second = run_fuzz(config);
    CHECK(first.render() == second.render());
    CHECK(first.failures == 0);

    CHECK(fuzz_instance(config, 7) == fuzz_instance(config, 7));
    config.jobs = 4; // merged by trial index, so thread count cannot matter
    CHECK(run_fuzz(config).render() == first.render());
}

TEST_CASE("fuzz with a tiny value pool skips disconnected work but keeps counting") {
    FuzzConfig config;
    config.trials = 40;
    config.max_value = 3;
    config.seed = 5;
    FuzzSummary summary = run_fuzz(config);
    CHECK(summary.failures == 0);
    CHECK(summary.disconnected > 0);
    CHECK(summary.subset_reversal.pass ==
          summary.connected + summary.disconnected);
}
