#include "vfree/graph_of_groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <string>

namespace vfree {

namespace {

bool valid_symbol_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name)
        if (c == '^' || c == ';' || c == ',' || c == '[' || c == ']' || std::isspace(static_cast<unsigned char>(c)))
            return false;
    return true;
}

void check_map(const GraphOfGroupsData& data, EdgeId e, const std::vector<Element>& map, VertexId v,
               const char* which, std::vector<Diagnostic>& out) {
    const EdgeData& edge = data.edges[e];
    const FiniteGroup& from = edge.group;
    const FiniteGroup& to = data.vertices[v].group;
    std::string where = "edge '" + edge.symbol + "' map " + which;
    if (map.size() != from.order()) {
        out.push_back({Diagnostic::Kind::BadMap, where + " has " + std::to_string(map.size()) +
                                                     " entries, edge group has order " +
                                                     std::to_string(from.order())});
        return;
    }
    for (Element x : map)
        if (x >= to.order()) {
            out.push_back({Diagnostic::Kind::BadMap, where + " sends an element out of range"});
            return;
        }
    for (Element x = 0; x < from.order(); ++x)
        for (Element y = 0; y < from.order(); ++y)
            if (map[from.mul(x, y)] != to.mul(map[x], map[y])) {
                out.push_back({Diagnostic::Kind::NotHomomorphism,
                               where + " does not respect " + std::to_string(x) + "*" + std::to_string(y)});
                return;
            }
    std::vector<char> hit(to.order());
    for (Element x = 0; x < from.order(); ++x) {
        if (hit[map[x]]++) {
            out.push_back({Diagnostic::Kind::NotInjective,
                           where + " is not injective (element " + std::to_string(map[x]) + " hit twice)"});
            return;
        }
    }
}

}  // namespace

std::vector<Diagnostic> validate(const GraphOfGroupsData& data) {
    std::vector<Diagnostic> out;
    const std::size_t nv = data.vertices.size();
    if (nv == 0) {
        out.push_back({Diagnostic::Kind::BadReference, "graph has no vertices"});
        return out;
    }
    if (data.base_vertex >= nv)
        out.push_back({Diagnostic::Kind::BadReference, "base vertex out of range"});

    std::set<std::string> symbols;
    auto claim = [&](const std::string& name, const std::string& what) {
        if (!valid_symbol_name(name))
            out.push_back({Diagnostic::Kind::BadSymbol, what + " has invalid symbol name '" + name + "'"});
        else if (!symbols.insert(name).second)
            out.push_back({Diagnostic::Kind::DuplicateSymbol, "symbol '" + name + "' used twice (" + what + ")"});
    };
    for (const VertexData& v : data.vertices)
        for (const auto& g : v.group.generators()) claim(g.symbol, "generator of vertex '" + v.name + "'");

    std::vector<VertexId> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (EdgeId e = 0; e < data.edges.size(); ++e) {
        const EdgeData& edge = data.edges[e];
        claim(edge.symbol, "edge");
        if (edge.source >= nv || edge.target >= nv) {
            out.push_back({Diagnostic::Kind::BadReference, "edge '" + edge.symbol + "' has an endpoint out of range"});
            continue;
        }
        check_map(data, e, edge.source_map, edge.source, "i", out);
        check_map(data, e, edge.target_map, edge.target, "t", out);
        parent[find(edge.source)] = find(edge.target);
    }
    for (VertexId v = 1; v < nv; ++v)
        if (find(v) != find(0)) {
            out.push_back({Diagnostic::Kind::NotConnected,
                           "vertex '" + data.vertices[v].name + "' is not connected to '" +
                               data.vertices[0].name + "'"});
            break;
        }
    return out;
}

Alphabet::Alphabet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (SymbolId i = 0; i < symbols_.size(); ++i) by_name_.emplace(symbols_[i].name, i);
}

std::optional<SymbolId> Alphabet::find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

struct GraphOfGroups::Impl {
    GraphOfGroupsData data;
    Alphabet alphabet;
    std::vector<SymbolId> first_symbol;       // per vertex
    std::vector<SymbolId> edge_symbols;       // per edge
    std::vector<std::vector<Word>> words;     // per vertex, per element
    std::vector<LabeledGraph> cayley;         // per vertex, alphabet labels
    std::vector<std::vector<std::optional<Element>>> source_pre, target_pre;
    std::vector<std::vector<Word>> relators;  // per edge, per element of A_e
    std::size_t max_cayley_edges = 0;
    std::size_t max_relator_length = 0;
};

GraphOfGroups GraphOfGroups::from_data(GraphOfGroupsData data) {
    if (auto diags = validate(data); !diags.empty()) throw ValidationError(std::move(diags));

    auto impl = std::make_shared<Impl>();
    impl->data = std::move(data);
    const auto& d = impl->data;

    std::vector<Alphabet::Symbol> symbols;
    for (VertexId v = 0; v < d.vertices.size(); ++v) {
        impl->first_symbol.push_back(static_cast<SymbolId>(symbols.size()));
        const auto& gens = d.vertices[v].group.generators();
        for (std::uint32_t i = 0; i < gens.size(); ++i)
            symbols.push_back({gens[i].symbol, Alphabet::Kind::Vertex, v, i});
    }
    for (EdgeId e = 0; e < d.edges.size(); ++e) {
        impl->edge_symbols.push_back(static_cast<SymbolId>(symbols.size()));
        symbols.push_back({d.edges[e].symbol, Alphabet::Kind::Edge, e, 0});
    }
    impl->alphabet = Alphabet(std::move(symbols));

    for (VertexId v = 0; v < d.vertices.size(); ++v) {
        const FiniteGroup& g = d.vertices[v].group;
        auto words = shortest_words(g);
        for (Word& w : words)
            for (Letter& l : w) l.symbol += impl->first_symbol[v];
        impl->words.push_back(std::move(words));
        LabeledGraph cay = cayley_graph(g);
        for (auto& edge : cay.edges) edge.label += impl->first_symbol[v];
        impl->max_cayley_edges = std::max(impl->max_cayley_edges, cay.edges.size());
        impl->cayley.push_back(std::move(cay));
    }

    for (EdgeId e = 0; e < d.edges.size(); ++e) {
        const EdgeData& edge = d.edges[e];
        std::vector<std::optional<Element>> src(d.vertices[edge.source].group.order());
        std::vector<std::optional<Element>> dst(d.vertices[edge.target].group.order());
        std::vector<Word> rel;
        for (Element h = 0; h < edge.group.order(); ++h) {
            src[edge.source_map[h]] = h;
            dst[edge.target_map[h]] = h;
            Word r{sym(impl->edge_symbols[e])};
            const Word& w = impl->words[edge.target][edge.target_map[h]];
            r.insert(r.end(), w.begin(), w.end());
            r.push_back(inv(impl->edge_symbols[e]));
            Word vinv = inverse_word(impl->words[edge.source][edge.source_map[h]]);
            r.insert(r.end(), vinv.begin(), vinv.end());
            impl->max_relator_length = std::max(impl->max_relator_length, r.size());
            rel.push_back(std::move(r));
        }
        impl->source_pre.push_back(std::move(src));
        impl->target_pre.push_back(std::move(dst));
        impl->relators.push_back(std::move(rel));
    }

    GraphOfGroups out;
    out.impl_ = std::move(impl);
    return out;
}

const GraphOfGroupsData& GraphOfGroups::data() const { return impl_->data; }
const Alphabet& GraphOfGroups::alphabet() const { return impl_->alphabet; }
VertexId GraphOfGroups::base_vertex() const { return impl_->data.base_vertex; }
std::size_t GraphOfGroups::vertex_count() const { return impl_->data.vertices.size(); }
std::size_t GraphOfGroups::edge_count() const { return impl_->data.edges.size(); }
const FiniteGroup& GraphOfGroups::vertex_group(VertexId v) const { return impl_->data.vertices[v].group; }
const EdgeData& GraphOfGroups::edge(EdgeId e) const { return impl_->data.edges[e]; }
SymbolId GraphOfGroups::edge_symbol(EdgeId e) const { return impl_->edge_symbols[e]; }
SymbolId GraphOfGroups::vertex_symbol(VertexId v, std::uint32_t generator) const {
    return impl_->first_symbol[v] + generator;
}
const Word& GraphOfGroups::element_word(VertexId v, Element g) const { return impl_->words[v][g]; }
const Word& GraphOfGroups::relator(EdgeId e, Element h) const { return impl_->relators[e][h]; }
const LabeledGraph& GraphOfGroups::cayley(VertexId v) const { return impl_->cayley[v]; }
std::size_t GraphOfGroups::max_cayley_edges() const { return impl_->max_cayley_edges; }
std::size_t GraphOfGroups::max_relator_length() const { return impl_->max_relator_length; }

std::optional<Element> GraphOfGroups::try_evaluate_run(VertexId v, std::span<const Letter> run) const {
    const FiniteGroup& g = vertex_group(v);
    const auto& alpha = alphabet();
    Element acc = g.identity();
    for (const Letter& l : run) {
        if (l.symbol >= alpha.size()) return std::nullopt;
        const auto& s = alpha[l.symbol];
        if (s.kind != Alphabet::Kind::Vertex || s.owner != v) return std::nullopt;
        Element x = g.generators()[s.local].element;
        acc = g.mul(acc, l.inverse ? g.inverse(x) : x);
    }
    return acc;
}

Element GraphOfGroups::evaluate_run(VertexId v, std::span<const Letter> run) const {
    if (auto x = try_evaluate_run(v, run)) return *x;
    throw ForeignSymbol("run contains a letter outside gen " + data().vertices[v].name);
}

std::optional<Element> GraphOfGroups::source_preimage(EdgeId e, Element g) const {
    return impl_->source_pre[e][g];
}

std::optional<Element> GraphOfGroups::target_preimage(EdgeId e, Element g) const {
    return impl_->target_pre[e][g];
}

std::string default_symbol_name(const GraphOfGroupsData& data, VertexId v, Element g) {
    std::set<std::string> used;
    for (const auto& vd : data.vertices)
        for (const auto& gen : vd.group.generators()) used.insert(gen.symbol);
    for (const auto& ed : data.edges) used.insert(ed.symbol);
    std::string name = data.vertices[v].name + "_" + std::to_string(g);
    while (used.count(name)) name += "'";
    return name;
}

GraphOfGroups augment_edge_image_generators(const GraphOfGroups& gog, const SymbolNamer& namer) {
    GraphOfGroupsData data = gog.data();
    bool changed = false;
    for (VertexId v = 0; v < data.vertices.size(); ++v) {
        std::vector<Element> images;
        for (const EdgeData& e : data.edges) {
            if (e.source == v) images.insert(images.end(), e.source_map.begin(), e.source_map.end());
            if (e.target == v) images.insert(images.end(), e.target_map.begin(), e.target_map.end());
        }
        std::sort(images.begin(), images.end());
        images.erase(std::unique(images.begin(), images.end()), images.end());
        const FiniteGroup& group = data.vertices[v].group;
        auto gens = group.generators();
        for (Element g : images) {
            if (g == group.identity()) continue;
            bool named = std::any_of(gens.begin(), gens.end(), [g](const auto& x) { return x.element == g; });
            if (named) continue;
            gens.push_back({namer(data, v, g), g});
            data.vertices[v].group = group.with_generators(gens);
            changed = true;
        }
    }
    if (!changed) return gog;
    return GraphOfGroups::from_data(std::move(data));
}

std::vector<Word> Presentation::relations() const {
    std::vector<Word> out = vertex_relations;
    out.insert(out.end(), bass_serre_relations.begin(), bass_serre_relations.end());
    return out;
}

Presentation presentation(const GraphOfGroups& gog) {
    Presentation p;
    p.alphabet = gog.alphabet();
    for (VertexId v = 0; v < gog.vertex_count(); ++v) {
        const FiniteGroup& g = gog.vertex_group(v);
        std::set<Word> seen;
        const auto& gens = g.generators();
        for (std::uint32_t i = 0; i < gens.size(); ++i) {
            Word power(g.element_order(gens[i].element), sym(gog.vertex_symbol(v, i)));
            if (seen.insert(power).second) p.vertex_relations.push_back(std::move(power));
        }
        // One relator per Cayley edge g -x-> gx: W(g) x W(gx)^-1.
        for (Element x = 0; x < g.order(); ++x)
            for (std::uint32_t i = 0; i < gens.size(); ++i) {
                Word r = gog.element_word(v, x);
                r.push_back(sym(gog.vertex_symbol(v, i)));
                Word tail = inverse_word(gog.element_word(v, g.mul(x, gens[i].element)));
                r.insert(r.end(), tail.begin(), tail.end());
                r = free_reduce(r);
                if (!r.empty() && seen.insert(r).second) p.vertex_relations.push_back(std::move(r));
            }
    }
    for (EdgeId e = 0; e < gog.edge_count(); ++e)
        for (Element h = 0; h < gog.edge(e).group.order(); ++h) p.bass_serre_relations.push_back(gog.relator(e, h));
    return p;
}

Word Syllables::join() const {
    Word out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        out.insert(out.end(), runs[i].begin(), runs[i].end());
        if (i < edges.size()) out.push_back(edges[i]);
    }
    return out;
}

Syllables syllable_decompose(const Alphabet& alphabet, std::span<const Letter> word) {
    Syllables s;
    s.runs.emplace_back();
    for (const Letter& l : word) {
        if (l.symbol >= alphabet.size()) throw ForeignSymbol("symbol id " + std::to_string(l.symbol) + " out of range");
        if (alphabet.is_edge(l.symbol)) {
            s.edges.push_back(l);
            s.runs.emplace_back();
        } else {
            s.runs.back().push_back(l);
        }
    }
    return s;
}

std::optional<VertexId> trace_path(const GraphOfGroups& gog, std::span<const Letter> word, VertexId start,
                                   LoopCheck* check) {
    const Alphabet& alpha = gog.alphabet();
    VertexId at = start;
    auto fail = [&](std::size_t pos, std::string reason) -> std::optional<VertexId> {
        if (check) *check = {false, pos, std::move(reason)};
        return std::nullopt;
    };
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Letter& l = word[i];
        if (l.symbol >= alpha.size()) return fail(i, "unknown symbol id");
        const auto& s = alpha[l.symbol];
        if (s.kind == Alphabet::Kind::Vertex) {
            if (s.owner != at)
                return fail(i, "symbol '" + s.name + "' is not a generator of vertex '" +
                                   gog.data().vertices[at].name + "'");
            continue;
        }
        const EdgeData& e = gog.edge(s.owner);
        VertexId from = l.inverse ? e.target : e.source;
        if (from != at)
            return fail(i, "edge letter '" + s.name + (l.inverse ? "^-1" : "") + "' does not start at vertex '" +
                               gog.data().vertices[at].name + "'");
        at = l.inverse ? e.source : e.target;
    }
    if (check) *check = {};
    return at;
}

LoopCheck is_aloop(const GraphOfGroups& gog, std::span<const Letter> word, VertexId base) {
    LoopCheck check;
    auto end = trace_path(gog, word, base, &check);
    if (!end) return check;
    if (*end != base)
        return {false, word.size(),
                "path ends at vertex '" + gog.data().vertices[*end].name + "' instead of '" +
                    gog.data().vertices[base].name + "'"};
    return {};
}

bool is_reduced(const GraphOfGroups& gog, std::span<const Letter> word) {
    const Alphabet& alpha = gog.alphabet();
    for (const Letter& l : word)
        if (l.symbol >= alpha.size()) throw ForeignSymbol("symbol id " + std::to_string(l.symbol) + " out of range");
    if (!is_freely_reduced(word)) return false;

    std::optional<std::size_t> prev;  // position of the previous edge letter
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!alpha.is_edge(word[i].symbol)) continue;
        if (prev && word[*prev].symbol == word[i].symbol && word[*prev].inverse != word[i].inverse) {
            EdgeId e = alpha[word[i].symbol].owner;
            const EdgeData& edge = gog.edge(e);
            auto run = word.subspan(*prev + 1, i - *prev - 1);
            if (!word[*prev].inverse) {
                // e W e^-1 with W in A_{t(e)}
                auto g = gog.try_evaluate_run(edge.target, run);
                if (g && gog.target_preimage(e, *g)) return false;
            } else {
                auto g = gog.try_evaluate_run(edge.source, run);
                if (g && gog.source_preimage(e, *g)) return false;
            }
        }
        prev = i;
    }
    return true;
}

}  // namespace vfree
