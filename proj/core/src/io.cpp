#include "divtop/io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace divtop {

namespace {

Label parse_one(const std::string& token) {
    std::size_t used = 0;
    Label value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::invalid_argument&) {
        throw InputError("not an integer: '" + token + "'");
    } catch (const std::out_of_range&) {
        throw InputError("value exceeds the 2^63 bound: '" + token + "'");
    }
    if (used != token.size()) throw InputError("not an integer: '" + token + "'");
    require_positive(value);
    return value;
}

std::vector<Label> parse_json_array(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON input: ") + e.what());
    }
    if (!doc.is_array()) throw InputError("JSON input must be an array of integers");
    std::vector<Label> values;
    for (const auto& item : doc) {
        if (!item.is_number_integer()) {
            throw InputError("JSON input must contain only integers");
        }
        Label v = item.get<Label>();
        require_positive(v);
        values.push_back(v);
    }
    return values;
}

} // namespace

std::vector<Label> parse_values(const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '[') {
        return parse_json_array(text);
    }
    std::vector<Label> values;
    std::string token;
    const auto flush = [&] {
        if (!token.empty()) {
            values.push_back(parse_one(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    if (values.empty()) throw InputError("no integers in input");
    return values;
}

IntegerSet parse_input(const std::string& argument) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(argument, ec)) {
        std::ifstream in(argument);
        if (!in) throw InputError("cannot read input file: " + argument);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return IntegerSet::from_values(parse_values(buffer.str()));
    }
    return IntegerSet::from_values(parse_values(argument));
}

std::string export_dot(const SimplicialComplex& complex) {
    std::ostringstream out;
    out << "graph complex {\n";
    for (const Simplex& t : complex.simplices_of_dimension(2)) {
        const auto& v = t.vertices();
        out << "  // triangle " << v[0] << " " << v[1] << " " << v[2] << "\n";
    }
    for (Label v : complex.vertices()) {
        out << "  " << v << ";\n";
    }
    for (const Simplex& e : complex.simplices_of_dimension(1)) {
        out << "  " << e.vertices()[0] << " -- " << e.vertices()[1] << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const SimplicialComplex& complex) {
    nlohmann::json doc;
    doc["vertices"] = complex.vertices();
    auto& facets = doc["facets"] = nlohmann::json::array();
    for (const Simplex& f : complex.facets()) facets.push_back(f.vertices());
    auto& edges = doc["edges"] = nlohmann::json::array();
    for (const Simplex& e : complex.simplices_of_dimension(1)) edges.push_back(e.vertices());
    auto& triangles = doc["triangles"] = nlohmann::json::array();
    for (const Simplex& t : complex.simplices_of_dimension(2)) {
        triangles.push_back(t.vertices());
    }
    return doc.dump(2) + "\n";
}

} // namespace divtop
