#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "vfree/graph_of_groups.hpp"
#include "vfree/huge_alloc.hpp"
#include "vfree/word.hpp"

namespace vfree {

struct FoldOptions {
    /// When set, the UNFOLDED worklist is popped in a random order drawn from
    /// this seed instead of LIFO order.
    std::optional<std::uint64_t> shuffle_seed;
};

struct FoldStats {
    std::size_t merges = 0;         ///< distinct far endpoints identified
    std::size_t removed_edges = 0;  ///< one per fold
    std::size_t certified = 0;      ///< worklist pops that found the vertex folded
};

/// An X-labelled directed multigraph over a graph of groups, with a
/// disjoint-set overlay on its vertices.
///
/// Vertex handles stay valid across merges; `find` maps a handle to the
/// representative of its class. Every class owns a circular doubly-linked list
/// of incident half-edges. Edge `f` has two half-edges: `2f` (outgoing, in the
/// list of its source) and `2f + 1` (incoming, in the list of its target).
/// Removed edges are tombstoned.
class AGraph {
public:
    using Vertex = std::uint32_t;
    using EdgeRef = std::uint32_t;

    explicit AGraph(GraphOfGroups gog);

    const GraphOfGroups& gog() const { return gog_; }

    void reserve(std::size_t vertices, std::size_t edges);

    /// `unfolded` puts the vertex on the UNFOLDED worklist.
    Vertex add_vertex(bool unfolded = false);
    EdgeRef add_edge(Vertex source, Vertex target, SymbolId label);

    /// Adds a path reading `word` from `from`. Interior vertices are fresh;
    /// the last vertex is `to` when given, otherwise fresh. Returns the end.
    Vertex add_path(Vertex from, std::span<const Letter> word, std::optional<Vertex> to = std::nullopt,
                    bool unfolded = false);

    Vertex find(Vertex v) const;
    Vertex basepoint() const { return find(basepoint_); }
    void set_basepoint(Vertex v) { basepoint_ = v; }

    std::optional<VertexId> assignment(Vertex v) const;
    /// Throws ConflictingAssignment when `v` is already assigned elsewhere.
    void assign(Vertex v, VertexId a);
    /// Assigns the endpoints of every live edge from its label.
    void derive_assignments();

    void mark_unfolded(Vertex v);
    std::size_t unfolded_size() const { return worklist_.size(); }

    std::size_t allocated_vertices() const { return parent_.size(); }
    std::size_t allocated_edges() const { return edges_.size(); }
    std::size_t vertex_count() const { return live_vertices_; }
    std::size_t edge_count() const { return live_edges_; }

    bool edge_alive(EdgeRef f) const { return !edges_[f].dead; }
    Vertex edge_source(EdgeRef f) const { return find(edges_[f].source); }
    Vertex edge_target(EdgeRef f) const { return find(edges_[f].target); }
    SymbolId edge_label(EdgeRef f) const { return edges_[f].label; }

    /// Half-edges currently incident to the class of `v`, in list order.
    std::vector<std::uint32_t> half_edges(Vertex v) const;

    /// True when no class has two half-edges with the same (label, direction).
    bool is_folded() const;

    /// Stallings folding driven by the UNFOLDED worklist.
    FoldStats fold(const FoldOptions& options = {});

private:
    friend class FoldedSubgroup;
    friend void write_dot(std::ostream& out, const AGraph& ag);

    std::int32_t far_end(std::uint32_t half) const {
        const EdgeRec& e = edges_[half >> 1];
        return static_cast<std::int32_t>(find((half & 1) ? e.source : e.target));
    }
    std::int32_t& next_of(std::int32_t half) { return edges_[half >> 1].next[half & 1]; }
    std::int32_t& prev_of(std::int32_t half) { return edges_[half >> 1].prev[half & 1]; }
    std::int32_t next_of(std::int32_t half) const { return edges_[half >> 1].next[half & 1]; }
    Vertex unite(Vertex a, Vertex b);
    void unlink(std::uint32_t half, Vertex owner);
    void link(std::uint32_t half, Vertex owner);

    GraphOfGroups gog_;
    Vertex basepoint_ = 0;

    struct VertexRec {
        std::int32_t head;        // first incident half-edge, -1 when none
        std::int32_t assignment;  // vertex of the underlying graph, -1 when unknown
        std::uint8_t rank;
        std::uint8_t queued;
    };
    // An edge with the list links of its two half-edges.
    struct EdgeRec {
        Vertex source;
        Vertex target;
        SymbolId label;
        std::uint32_t dead;
        std::int32_t next[2];
        std::int32_t prev[2];
    };

    template <class T>
    using Array = std::vector<T, HugePageAllocator<T>>;

    mutable Array<Vertex> parent_;
    Array<VertexRec> verts_;
    Array<EdgeRec> edges_;

    std::vector<Vertex> worklist_;
    std::size_t live_vertices_ = 0;
    std::size_t live_edges_ = 0;
};

/// A completely folded, connected A-graph in canonical numbering.
///
/// Vertices are numbered breadth-first from the basepoint (which is 0), each
/// vertex exploring its transitions in (label, outgoing-before-incoming)
/// order. Two FoldedSubgroups compare equal iff they are isomorphic as based
/// labelled graphs.
class FoldedSubgroup {
public:
    struct Edge {
        std::uint32_t source;
        std::uint32_t target;
        SymbolId label;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    /// Compacts a folded AGraph. `tracked` vertices are translated into the
    /// canonical numbering and written to `tracked_ids`.
    static FoldedSubgroup from_graph(const AGraph& folded, std::span<const AGraph::Vertex> tracked = {},
                                     std::vector<std::uint32_t>* tracked_ids = nullptr);

    const GraphOfGroups& gog() const { return gog_; }
    std::size_t vertex_count() const { return assignment_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::uint32_t basepoint() const { return 0; }
    VertexId assignment(std::uint32_t v) const { return assignment_[v]; }

    std::optional<std::uint32_t> step(std::uint32_t v, Letter l) const {
        std::int32_t t = next_[v * stride_ + 2 * l.symbol + (l.inverse ? 1 : 0)];
        if (t < 0) return std::nullopt;
        return static_cast<std::uint32_t>(t);
    }
    std::optional<std::uint32_t> trace(std::span<const Letter> word, std::uint32_t from = 0) const;

    /// Every edge once, ordered by source then label.
    std::vector<Edge> edges() const;

    friend bool operator==(const FoldedSubgroup& a, const FoldedSubgroup& b) {
        return a.stride_ == b.stride_ && a.next_ == b.next_ && a.assignment_ == b.assignment_;
    }

private:
    explicit FoldedSubgroup(GraphOfGroups gog) : gog_(std::move(gog)) {}

    GraphOfGroups gog_;
    std::size_t stride_ = 0;  // 2 |X|
    std::size_t edge_count_ = 0;
    std::vector<std::int32_t> next_;
    std::vector<VertexId> assignment_;
};

/// Linear paths for each word glued at a common basepoint. Throws NotALoop
/// when a word is not an A-loop at the base vertex.
AGraph bouquet(const GraphOfGroups& gog, std::span<const Word> words);

/// Glues a copy of the Cayley graph of A_[w] at every current vertex w.
void vertex_saturate(AGraph& ag);

/// Attaches a relator loop e W e^-1 V^-1 at the source of every current
/// e-labelled edge, one per element of A_e.
void edge_saturate(AGraph& ag);

/// Runs the folding and compacts the result.
FoldedSubgroup fold(AGraph& ag, const FoldOptions& options = {});

struct BuildStats {
    std::size_t input_symbols = 0;
    std::size_t bouquet_edges = 0;
    std::size_t saturated_edges = 0;
    FoldStats fold;
};

/// Symbols added per round of saturation and folding in build_subgroup_graph.
inline constexpr std::size_t build_chunk_symbols = 4096;

/// Bouquet, vertex saturation, edge saturation, folding. Same result as
/// composing bouquet, vertex_saturate, edge_saturate and fold.
FoldedSubgroup build_subgroup_graph(const GraphOfGroups& gog, std::span<const Word> words,
                                    const FoldOptions& options = {}, BuildStats* stats = nullptr);

/// Whether a reduced A-loop at the base reads as a loop at the basepoint.
/// Throws NotALoop / NotReduced on words outside that contract.
bool member(const FoldedSubgroup& fs, std::span<const Letter> word);

/// Reduces `word` first, so any A-loop at the base is accepted as input.
bool member_full(const FoldedSubgroup& fs, std::span<const Letter> word);

/// A reduced word with the same evaluation as the A-loop `word`.
Word reduce_word(const GraphOfGroups& gog, std::span<const Letter> word);

/// Reduces an A-path starting at `start`. Throws NotALoop(0, ...) when the
/// word is not a path.
Word reduce_path(const GraphOfGroups& gog, std::span<const Letter> word, VertexId start);

/// Every V(A)-component of the folded graph is a full Cayley graph.
bool is_free_subgroup(const FoldedSubgroup& fs);

bool subgroups_equal(const GraphOfGroups& gog, std::span<const Word> first, std::span<const Word> second);

void write_dot(std::ostream& out, const FoldedSubgroup& fs);
void write_dot(std::ostream& out, const AGraph& ag);

}  // namespace vfree
