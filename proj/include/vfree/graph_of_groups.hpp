#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vfree/errors.hpp"
#include "vfree/finite_group.hpp"
#include "vfree/word.hpp"

namespace vfree {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct VertexData {
    std::string name;
    FiniteGroup group;
    friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// One directed edge e with its group and the two monomorphisms
/// `source_map` : A_e -> A_{source} and `target_map` : A_e -> A_{target},
/// stored as element-index arrays.
struct EdgeData {
    std::string symbol;
    VertexId source = 0;
    VertexId target = 0;
    FiniteGroup group;
    std::vector<Element> source_map;
    std::vector<Element> target_map;
    friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

/// Unvalidated description of a graph of finite groups.
struct GraphOfGroupsData {
    std::vector<VertexData> vertices;
    std::vector<EdgeData> edges;
    VertexId base_vertex = 0;
    friend bool operator==(const GraphOfGroupsData&, const GraphOfGroupsData&) = default;
};

/// Empty when every structural requirement holds.
std::vector<Diagnostic> validate(const GraphOfGroupsData& data);

/// The symbol set X: every vertex generator symbol plus every edge symbol.
/// Vertex symbols come first, grouped by vertex in generator order, then the
/// edge symbols in edge order.
class Alphabet {
public:
    enum class Kind { Vertex, Edge };
    struct Symbol {
        std::string name;
        Kind kind;
        std::uint32_t owner;  ///< vertex id or edge id
        std::uint32_t local;  ///< generator index within the vertex group (vertex symbols)
    };

    Alphabet() = default;
    explicit Alphabet(std::vector<Symbol> symbols);

    std::size_t size() const { return symbols_.size(); }
    const Symbol& operator[](SymbolId id) const { return symbols_[id]; }
    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::optional<SymbolId> find(std::string_view name) const;
    bool is_edge(SymbolId id) const { return symbols_[id].kind == Kind::Edge; }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, SymbolId> by_name_;
};

/// A validated graph of finite groups with the derived data the folding
/// algorithm consumes: the alphabet, Cayley graphs, fixed shortest words for
/// every vertex-group element and the Bass-Serre relators.
///
/// Immutable; copies share state.
class GraphOfGroups {
public:
    /// Throws ValidationError carrying every diagnostic of `validate`.
    static GraphOfGroups from_data(GraphOfGroupsData data);

    const GraphOfGroupsData& data() const;
    const Alphabet& alphabet() const;
    VertexId base_vertex() const;
    std::size_t vertex_count() const;
    std::size_t edge_count() const;
    const FiniteGroup& vertex_group(VertexId v) const;
    const EdgeData& edge(EdgeId e) const;

    SymbolId edge_symbol(EdgeId e) const;
    SymbolId vertex_symbol(VertexId v, std::uint32_t generator) const;

    /// Evaluates a run of vertex letters inside A_v.
    Element evaluate_run(VertexId v, std::span<const Letter> run) const;
    /// Like evaluate_run, but returns nullopt when some letter is not in gen v.
    std::optional<Element> try_evaluate_run(VertexId v, std::span<const Letter> run) const;

    /// Preimage under i_e / t_e, or nullopt when g is outside the image.
    std::optional<Element> source_preimage(EdgeId e, Element g) const;
    std::optional<Element> target_preimage(EdgeId e, Element g) const;

    /// The fixed shortest word for g in A_v, over alphabet ids.
    const Word& element_word(VertexId v, Element g) const;

    /// e W(t_e(h)) e^-1 V(i_e(h))^-1.
    const Word& relator(EdgeId e, Element h) const;

    /// Cayley graph of A_v with labels translated to alphabet ids.
    const LabeledGraph& cayley(VertexId v) const;

    /// Largest Cayley graph edge count (M) and largest relator length (K).
    std::size_t max_cayley_edges() const;
    std::size_t max_relator_length() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Names the fresh generator added for element `g` of vertex `v`.
using SymbolNamer = std::function<std::string(const GraphOfGroupsData&, VertexId, Element)>;

/// `<vertex name>_<element index>`, primed until unused.
std::string default_symbol_name(const GraphOfGroupsData& data, VertexId v, Element g);

/// Adds a generator for every non-identity element in the image of an
/// incident edge map that no generator names yet. Idempotent.
GraphOfGroups augment_edge_image_generators(const GraphOfGroups& gog,
                                            const SymbolNamer& namer = default_symbol_name);

struct Presentation {
    Alphabet alphabet;
    std::vector<Word> vertex_relations;
    std::vector<Word> bass_serre_relations;

    std::vector<Word> relations() const;
};

Presentation presentation(const GraphOfGroups& gog);

/// Alternating decomposition W_0 e_1 W_1 ... e_n W_n.
struct Syllables {
    std::vector<Word> runs;     ///< n + 1 maximal vertex-letter runs
    std::vector<Letter> edges;  ///< n edge letters

    std::size_t length() const { return edges.size(); }
    Word join() const;
};

Syllables syllable_decompose(const Alphabet& alphabet, std::span<const Letter> word);

inline std::size_t syllable_length(const Alphabet& alphabet, std::span<const Letter> word) {
    std::size_t n = 0;
    for (const Letter& l : word) n += alphabet.is_edge(l.symbol);
    return n;
}

struct LoopCheck {
    bool ok = true;
    std::size_t position = 0;  ///< first offending letter, or word size for a bad endpoint
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Checks that the word is an A-path starting at `start`; on success the
/// returned vertex is where it ends.
std::optional<VertexId> trace_path(const GraphOfGroups& gog, std::span<const Letter> word,
                                   VertexId start, LoopCheck* check = nullptr);

LoopCheck is_aloop(const GraphOfGroups& gog, std::span<const Letter> word, VertexId base);
inline LoopCheck is_aloop(const GraphOfGroups& gog, std::span<const Letter> word) {
    return is_aloop(gog, word, gog.base_vertex());
}

/// Freely reduced and free of cancellable subwords e W e^-1 (W into t_e(A_e))
/// and e^-1 V e (V into i_e(A_e)).
bool is_reduced(const GraphOfGroups& gog, std::span<const Letter> word);

}  // namespace vfree
