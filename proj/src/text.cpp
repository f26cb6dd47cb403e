#include "vfree/text.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vfree/matrix.hpp"

namespace vfree {

using json = nlohmann::json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        std::string_view token = text.substr(start, i - start);
        std::string_view name = token;
        long exponent = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            name = token.substr(0, caret);
            std::string_view exp = token.substr(caret + 1);
            auto [end, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), exponent);
            if (exp.empty() || ec != std::errc() || end != exp.data() + exp.size() || exponent == 0)
                throw BadExponent("bad exponent in '" + std::string(token) + "' at position " +
                                  std::to_string(start));
        }
        auto id = alphabet.find(name);
        if (!id) throw UnknownSymbol("unknown symbol '" + std::string(name) + "' at position " + std::to_string(start));
        Letter l{*id, exponent < 0};
        for (long k = exponent < 0 ? -exponent : exponent; k > 0; --k) out.push_back(l);
    }
    return out;
}

std::vector<Word> parse_word_list(const Alphabet& alphabet, std::string_view text) {
    std::vector<Word> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    for (;;) {
        std::size_t semi = text.find(';', start);
        out.push_back(parse_word(alphabet, text.substr(start, semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

std::vector<Word> parse_word_lines(const Alphabet& alphabet, std::string_view text) {
    std::vector<Word> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = trim(text.substr(start, nl - start));
        if (!line.empty() && line.front() != '#') out.push_back(parse_word(alphabet, line));
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return out;
}

std::string format_word(const Alphabet& alphabet, std::span<const Letter> word) {
    std::string out;
    for (const Letter& l : word) {
        if (!out.empty()) out += ' ';
        if (l.symbol >= alphabet.size()) throw ForeignSymbol("symbol id " + std::to_string(l.symbol));
        out += alphabet[l.symbol].name;
        if (l.inverse) out += "^-1";
    }
    return out;
}

namespace {

ParseError located(std::string_view text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

mpz_class json_integer(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.dump(), 10);
    if (j.is_string()) return mpz_class(j.get<std::string>(), 10);
    throw ParseError("matrix entry must be an integer");
}

Mat2 json_matrix(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() ||
        j[1].size() != 2)
        throw ParseError("matrix must be [[a,b],[c,d]]");
    return {json_integer(j[0][0]), json_integer(j[0][1]), json_integer(j[1][0]), json_integer(j[1][1])};
}

// Reads a group; table problems become diagnostics rather than exceptions.
FiniteGroup json_group(const json& j, const std::string& what, std::vector<Diagnostic>& diags) {
    try {
        if (j.contains("matrix_generators")) {
            std::vector<std::pair<std::string, Mat2>> gens;
            for (const json& g : j.at("matrix_generators"))
                gens.emplace_back(g.at("symbol").get<std::string>(), json_matrix(g.at("matrix")));
            return matrix_closure(gens).group;
        }
        std::vector<FiniteGroup::Generator> gens;
        for (const json& g : j.value("generators", json::array()))
            gens.push_back({g.at("symbol").get<std::string>(), g.at("element").get<Element>()});
        return FiniteGroup::from_mult_table(j.at("order").get<std::size_t>(), j.value("identity", Element{0}),
                                            j.at("mult").get<std::vector<std::vector<Element>>>(), std::move(gens));
    } catch (const TableNotAGroup& e) {
        diags.push_back({Diagnostic::Kind::BadTable, what + ": " + e.what()});
    } catch (const GeneratorsDontGenerate& e) {
        diags.push_back({Diagnostic::Kind::BadTable, what + ": " + e.what()});
    }
    return {};
}

}  // namespace

GraphOfGroups parse_spec(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw located(json_text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
    }
    GraphOfGroupsData data;
    std::vector<Diagnostic> diags;
    try {
        if (!doc.is_object()) throw ParseError("spec must be a JSON object");
        int version = doc.value("format_version", spec_format_version);
        if (version != spec_format_version)
            throw ParseError("unsupported format_version " + std::to_string(version));

        std::map<std::string, VertexId> ids;
        for (const json& v : doc.at("vertices")) {
            std::string name = v.at("id").is_string() ? v.at("id").get<std::string>() : v.at("id").dump();
            if (!ids.emplace(name, static_cast<VertexId>(data.vertices.size())).second)
                diags.push_back({Diagnostic::Kind::BadReference, "vertex id '" + name + "' used twice"});
            data.vertices.push_back({name, json_group(v, "vertex '" + name + "'", diags)});
        }
        auto resolve = [&](const json& ref, const std::string& what) -> VertexId {
            std::string name = ref.is_string() ? ref.get<std::string>() : ref.dump();
            auto it = ids.find(name);
            if (it != ids.end()) return it->second;
            diags.push_back({Diagnostic::Kind::BadReference, what + " refers to unknown vertex '" + name + "'"});
            return 0;
        };
        for (const json& e : doc.value("edges", json::array())) {
            EdgeData ed;
            ed.symbol = e.at("symbol").get<std::string>();
            ed.source = resolve(e.at("from"), "edge '" + ed.symbol + "'");
            ed.target = resolve(e.at("to"), "edge '" + ed.symbol + "'");
            if (e.contains("edge_group")) ed.group = json_group(e.at("edge_group"), "edge '" + ed.symbol + "'", diags);
            ed.source_map = e.at("i").get<std::vector<Element>>();
            ed.target_map = e.at("t").get<std::vector<Element>>();
            data.edges.push_back(std::move(ed));
        }
        if (doc.contains("base_vertex")) data.base_vertex = resolve(doc.at("base_vertex"), "base_vertex");
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad spec structure: ") + e.what());
    }
    if (!diags.empty()) throw ValidationError(std::move(diags));
    return augment_edge_image_generators(GraphOfGroups::from_data(std::move(data)));
}

GraphOfGroups load_spec(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read spec file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

namespace {

void write_group(std::ostringstream& out, const FiniteGroup& g, const std::string& indent) {
    out << indent << "\"order\": " << g.order() << ",\n";
    out << indent << "\"identity\": " << g.identity() << ",\n";
    out << indent << "\"mult\": [\n";
    auto table = g.mult_table();
    for (std::size_t i = 0; i < table.size(); ++i)
        out << indent << "  " << json(table[i]).dump() << (i + 1 < table.size() ? ",\n" : "\n");
    out << indent << "],\n";
    out << indent << "\"generators\": [";
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        json x = {{"symbol", gens[i].symbol}, {"element", gens[i].element}};
        out << (i ? ", " : "") << x.dump();
    }
    out << "]";
}

}  // namespace

std::string serialize_spec(const GraphOfGroups& gog) {
    const GraphOfGroupsData& d = gog.data();
    std::ostringstream out;
    out << "{\n  \"format_version\": " << spec_format_version << ",\n";
    out << "  \"base_vertex\": " << json(d.vertices[d.base_vertex].name).dump() << ",\n";
    out << "  \"vertices\": [\n";
    for (std::size_t v = 0; v < d.vertices.size(); ++v) {
        out << "    {\n      \"id\": " << json(d.vertices[v].name).dump() << ",\n";
        write_group(out, d.vertices[v].group, "      ");
        out << "\n    }" << (v + 1 < d.vertices.size() ? ",\n" : "\n");
    }
    out << "  ],\n  \"edges\": [\n";
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const EdgeData& ed = d.edges[e];
        out << "    {\n      \"symbol\": " << json(ed.symbol).dump() << ",\n";
        out << "      \"from\": " << json(d.vertices[ed.source].name).dump() << ",\n";
        out << "      \"to\": " << json(d.vertices[ed.target].name).dump() << ",\n";
        out << "      \"edge_group\": {\n";
        write_group(out, ed.group, "        ");
        out << "\n      },\n";
        out << "      \"i\": " << json(ed.source_map).dump() << ",\n";
        out << "      \"t\": " << json(ed.target_map).dump() << "\n";
        out << "    }" << (e + 1 < d.edges.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace vfree
