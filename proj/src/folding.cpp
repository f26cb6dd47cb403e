#include "vfree/folding.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <string>

namespace vfree {

AGraph::AGraph(GraphOfGroups gog) : gog_(std::move(gog)) {}

void AGraph::reserve(std::size_t vertices, std::size_t edges) {
    parent_.reserve(vertices);
    verts_.reserve(vertices);
    edges_.reserve(edges);
}

AGraph::Vertex AGraph::add_vertex(bool unfolded) {
    auto v = static_cast<Vertex>(verts_.size());
    parent_.push_back(v);
    verts_.push_back({-1, -1, 0, 0});
    ++live_vertices_;
    if (unfolded) mark_unfolded(v);
    return v;
}

void AGraph::link(std::uint32_t half, Vertex owner) {
    auto h = static_cast<std::int32_t>(half);
    std::int32_t first = verts_[owner].head;
    if (first < 0) {
        next_of(h) = h;
        prev_of(h) = h;
        verts_[owner].head = h;
        return;
    }
    std::int32_t last = prev_of(first);
    next_of(last) = h;
    prev_of(h) = last;
    next_of(h) = first;
    prev_of(first) = h;
}

void AGraph::unlink(std::uint32_t half, Vertex owner) {
    auto h = static_cast<std::int32_t>(half);
    if (next_of(h) == h) {
        verts_[owner].head = -1;
    } else {
        std::int32_t n = next_of(h);
        std::int32_t p = prev_of(h);
        next_of(p) = n;
        prev_of(n) = p;
        if (verts_[owner].head == h) verts_[owner].head = n;
    }
}

AGraph::EdgeRef AGraph::add_edge(Vertex source, Vertex target, SymbolId label) {
    if (label >= gog_.alphabet().size()) throw ForeignSymbol("edge label out of range");
    source = find(source);
    target = find(target);
    auto f = static_cast<EdgeRef>(edges_.size());
    edges_.push_back({source, target, label, 0, {-1, -1}, {-1, -1}});
    link(2 * f, source);
    link(2 * f + 1, target);
    ++live_edges_;
    return f;
}

AGraph::Vertex AGraph::add_path(Vertex from, std::span<const Letter> word, std::optional<Vertex> to,
                                bool unfolded) {
    const Alphabet& alpha = gog_.alphabet();
    Vertex at = from;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const Letter& l = word[i];
        Vertex next = (i + 1 == word.size() && to) ? *to : add_vertex(unfolded);
        EdgeRef f = l.inverse ? add_edge(next, at, l.symbol) : add_edge(at, next, l.symbol);
        const auto& s = alpha[l.symbol];
        if (s.kind == Alphabet::Kind::Vertex) {
            assign(at, s.owner);
            assign(next, s.owner);
        } else {
            const EdgeData& e = gog_.edge(s.owner);
            assign(edges_[f].source, e.source);
            assign(edges_[f].target, e.target);
        }
        at = next;
    }
    if (word.empty() && to && find(*to) != find(from)) unite(find(from), find(*to));
    return at;
}

AGraph::Vertex AGraph::find(Vertex v) const {
    Vertex root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        Vertex up = parent_[v];
        parent_[v] = root;
        v = up;
    }
    return root;
}

std::optional<VertexId> AGraph::assignment(Vertex v) const {
    std::int32_t a = verts_[find(v)].assignment;
    if (a < 0) return std::nullopt;
    return static_cast<VertexId>(a);
}

void AGraph::assign(Vertex v, VertexId a) {
    Vertex r = find(v);
    if (verts_[r].assignment < 0) {
        verts_[r].assignment = static_cast<std::int32_t>(a);
    } else if (verts_[r].assignment != static_cast<std::int32_t>(a)) {
        const auto& names = gog_.data().vertices;
        throw ConflictingAssignment("vertex " + std::to_string(r) + " is forced onto both '" +
                                    names[verts_[r].assignment].name + "' and '" + names[a].name + "'");
    }
}

void AGraph::derive_assignments() {
    const Alphabet& alpha = gog_.alphabet();
    for (EdgeRef f = 0; f < edges_.size(); ++f) {
        if (!edge_alive(f)) continue;
        const auto& s = alpha[edges_[f].label];
        if (s.kind == Alphabet::Kind::Vertex) {
            assign(edges_[f].source, s.owner);
            assign(edges_[f].target, s.owner);
        } else {
            const EdgeData& e = gog_.edge(s.owner);
            assign(edges_[f].source, e.source);
            assign(edges_[f].target, e.target);
        }
    }
}

void AGraph::mark_unfolded(Vertex v) {
    v = find(v);
    if (verts_[v].queued) return;
    verts_[v].queued = 1;
    worklist_.push_back(v);
}

std::vector<std::uint32_t> AGraph::half_edges(Vertex v) const {
    std::vector<std::uint32_t> out;
    std::int32_t first = verts_[find(v)].head;
    if (first < 0) return out;
    std::int32_t h = first;
    do {
        out.push_back(static_cast<std::uint32_t>(h));
        h = next_of(h);
    } while (h != first);
    return out;
}

bool AGraph::is_folded() const {
    const std::size_t keys = 2 * gog_.alphabet().size();
    std::vector<std::size_t> seen(keys, 0);
    std::size_t stamp = 0;
    for (Vertex v = 0; v < verts_.size(); ++v) {
        if (parent_[v] != v || verts_[v].head < 0) continue;
        ++stamp;
        std::int32_t h = verts_[v].head;
        do {
            std::size_t key = 2 * edges_[h >> 1].label + (h & 1);
            if (seen[key] == stamp) return false;
            seen[key] = stamp;
            h = next_of(h);
        } while (h != verts_[v].head);
    }
    return true;
}

AGraph::Vertex AGraph::unite(Vertex a, Vertex b) {
    if (verts_[a].rank < verts_[b].rank) std::swap(a, b);
    parent_[b] = a;
    if (verts_[a].rank == verts_[b].rank) ++verts_[a].rank;

    std::int32_t ha = verts_[a].head;
    std::int32_t hb = verts_[b].head;
    if (ha < 0) {
        verts_[a].head = hb;
    } else if (hb >= 0) {
        std::int32_t ta = prev_of(ha);
        std::int32_t tb = prev_of(hb);
        next_of(ta) = hb;
        prev_of(hb) = ta;
        next_of(tb) = ha;
        prev_of(ha) = tb;
    }
    verts_[b].head = -1;

    if (verts_[a].assignment < 0) {
        verts_[a].assignment = verts_[b].assignment;
    } else if (verts_[b].assignment >= 0 && verts_[a].assignment != verts_[b].assignment) {
        throw InvariantBreach("folding identified vertices with different assignments");
    }
    --live_vertices_;
    return a;
}

FoldStats AGraph::fold(const FoldOptions& options) {
    FoldStats stats;
    const std::size_t keys = 2 * gog_.alphabet().size();
    // Pigeonhole: keys + 1 half-edges always contain a repeated key.
    const std::size_t cap = keys + 1;
    std::vector<std::uint32_t> stamp(keys, 0);
    std::vector<std::int32_t> slot(keys, -1);
    std::uint32_t current = 0;

    std::mt19937_64 rng(options.shuffle_seed.value_or(0));

    while (!worklist_.empty()) {
        Vertex v;
        if (options.shuffle_seed) {
            std::size_t i = std::uniform_int_distribution<std::size_t>(0, worklist_.size() - 1)(rng);
            std::swap(worklist_[i], worklist_.back());
        }
        v = worklist_.back();
        worklist_.pop_back();
        verts_[v].queued = 0;
        v = find(v);

        for (;;) {
            if (++current == 0) {
                std::fill(stamp.begin(), stamp.end(), 0);
                current = 1;
            }
            std::int32_t first = verts_[v].head;
            if (first < 0) {
                ++stats.certified;
                break;
            }
            std::int32_t h = first;
            std::int32_t dup_a = -1;
            std::int32_t dup_b = -1;
            std::size_t scanned = 0;
            do {
                std::size_t key = 2 * edges_[h >> 1].label + (h & 1);
                if (stamp[key] == current) {
                    dup_a = slot[key];
                    dup_b = h;
                    break;
                }
                stamp[key] = current;
                slot[key] = h;
                h = next_of(h);
                ++scanned;
            } while (h != first && scanned < cap);

            if (dup_b < 0) {
                ++stats.certified;
                break;
            }

            Vertex w1 = static_cast<Vertex>(far_end(static_cast<std::uint32_t>(dup_a)));
            Vertex w2 = static_cast<Vertex>(far_end(static_cast<std::uint32_t>(dup_b)));
            unlink(static_cast<std::uint32_t>(dup_b), v);
            unlink(static_cast<std::uint32_t>(dup_b ^ 1), w2);
            edges_[dup_b >> 1].dead = 1;
            --live_edges_;
            ++stats.removed_edges;
            if (w1 != w2) {
                mark_unfolded(unite(w1, w2));
                ++stats.merges;
            }
            v = find(v);
        }
    }
    return stats;
}

FoldedSubgroup FoldedSubgroup::from_graph(const AGraph& ag, std::span<const AGraph::Vertex> tracked,
                                          std::vector<std::uint32_t>* tracked_ids) {
    FoldedSubgroup fs(ag.gog());
    fs.stride_ = 2 * ag.gog().alphabet().size();
    std::vector<std::int32_t> canon(ag.allocated_vertices(), -1);
    std::vector<AGraph::Vertex> order{ag.basepoint()};
    canon[order[0]] = 0;
    std::vector<std::int32_t> slots(fs.stride_);
    fs.next_.reserve(ag.vertex_count() * fs.stride_);
    fs.assignment_.reserve(ag.vertex_count());

    for (std::size_t i = 0; i < order.size(); ++i) {
        AGraph::Vertex v = order[i];
        std::fill(slots.begin(), slots.end(), -1);
        std::int32_t first = ag.verts_[v].head;
        if (first >= 0) {
            std::int32_t h = first;
            do {
                std::size_t key = 2 * ag.edges_[h >> 1].label + (h & 1);
                if (slots[key] >= 0) throw InvariantBreach("compacting a graph that is not folded");
                slots[key] = ag.far_end(static_cast<std::uint32_t>(h));
                h = ag.next_of(h);
            } while (h != first);
        }
        auto a = ag.assignment(v);
        if (!a) throw InvariantBreach("folded graph has an unassigned vertex");
        fs.assignment_.push_back(*a);
        for (std::size_t key = 0; key < fs.stride_; ++key) {
            std::int32_t far = slots[key];
            if (far < 0) {
                fs.next_.push_back(-1);
                continue;
            }
            if (canon[far] < 0) {
                canon[far] = static_cast<std::int32_t>(order.size());
                order.push_back(static_cast<AGraph::Vertex>(far));
            }
            fs.next_.push_back(canon[far]);
            if ((key & 1) == 0) ++fs.edge_count_;
        }
    }
    if (tracked_ids) {
        tracked_ids->clear();
        for (AGraph::Vertex t : tracked) {
            std::int32_t id = canon[ag.find(t)];
            if (id < 0) throw InvariantBreach("tracked vertex is not connected to the basepoint");
            tracked_ids->push_back(static_cast<std::uint32_t>(id));
        }
    }
    return fs;
}

std::optional<std::uint32_t> FoldedSubgroup::trace(std::span<const Letter> word, std::uint32_t from) const {
    std::uint32_t at = from;
    for (const Letter& l : word) {
        if (l.symbol >= stride_ / 2) return std::nullopt;
        auto next = step(at, l);
        if (!next) return std::nullopt;
        at = *next;
    }
    return at;
}

std::vector<FoldedSubgroup::Edge> FoldedSubgroup::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::uint32_t v = 0; v < vertex_count(); ++v)
        for (std::size_t key = 0; key < stride_; key += 2) {
            std::int32_t t = next_[v * stride_ + key];
            if (t >= 0) out.push_back({v, static_cast<std::uint32_t>(t), static_cast<SymbolId>(key / 2)});
        }
    return out;
}

AGraph bouquet(const GraphOfGroups& gog, std::span<const Word> words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
        LoopCheck check = is_aloop(gog, words[i]);
        if (!check) throw NotALoop(i, check.position, check.reason);
        total += words[i].size();
    }
    AGraph ag(gog);
    ag.reserve(total + 1, total);
    AGraph::Vertex v0 = ag.add_vertex(true);
    ag.set_basepoint(v0);
    for (const Word& w : words)
        if (!w.empty()) ag.add_path(v0, w, v0, true);
    ag.derive_assignments();
    return ag;
}

namespace {

// Cayley copies at the roots among vertices [first, end).
void saturate_vertices(AGraph& ag, AGraph::Vertex first) {
    const GraphOfGroups& gog = ag.gog();
    const std::size_t n = ag.allocated_vertices();
    std::vector<AGraph::Vertex> ids;
    for (AGraph::Vertex w = first; w < n; ++w) {
        if (ag.find(w) != w) continue;
        auto a = ag.assignment(w);
        if (!a) continue;
        const LabeledGraph& cay = gog.cayley(*a);
        ids.assign(cay.vertex_count, 0);
        for (std::uint32_t x = 0; x < cay.vertex_count; ++x) {
            if (x == *cay.basepoint) {
                ids[x] = w;
            } else {
                ids[x] = ag.add_vertex();
                ag.assign(ids[x], *a);
            }
        }
        for (const auto& e : cay.edges) ag.add_edge(ids[e.source], ids[e.target], e.label);
        ag.mark_unfolded(w);
    }
}

// Relator loops at the sources of the live edge-symbol edges in [first, last).
void saturate_edges(AGraph& ag, AGraph::EdgeRef first, AGraph::EdgeRef last) {
    const GraphOfGroups& gog = ag.gog();
    const Alphabet& alpha = gog.alphabet();
    for (AGraph::EdgeRef f = first; f < last; ++f) {
        if (!ag.edge_alive(f) || !alpha.is_edge(ag.edge_label(f))) continue;
        EdgeId e = alpha[ag.edge_label(f)].owner;
        AGraph::Vertex at = ag.edge_source(f);
        ag.mark_unfolded(at);
        for (Element h = 0; h < gog.edge(e).group.order(); ++h) ag.add_path(at, gog.relator(e, h), at, true);
    }
}

}  // namespace

void vertex_saturate(AGraph& ag) {
    ag.derive_assignments();
    if (!ag.assignment(ag.basepoint())) ag.assign(ag.basepoint(), ag.gog().base_vertex());
    saturate_vertices(ag, 0);
}

void edge_saturate(AGraph& ag) { saturate_edges(ag, 0, static_cast<AGraph::EdgeRef>(ag.allocated_edges())); }

FoldedSubgroup fold(AGraph& ag, const FoldOptions& options) {
    ag.fold(options);
    return FoldedSubgroup::from_graph(ag);
}

namespace {

// Upper bounds on the size of the saturated graph built from `words`.
std::pair<std::size_t, std::size_t> saturated_size(const GraphOfGroups& gog, std::span<const Word> words) {
    std::size_t max_order = 0;
    for (VertexId v = 0; v < gog.vertex_count(); ++v) max_order = std::max(max_order, gog.vertex_group(v).order());
    std::size_t loop_edges = 0;
    for (EdgeId e = 0; e < gog.edge_count(); ++e)
        loop_edges = std::max(loop_edges, gog.edge(e).group.order() * gog.max_relator_length());
    std::size_t symbols = 0;
    std::size_t edge_letters = 0;
    for (const Word& w : words) {
        symbols += w.size();
        for (const Letter& l : w) edge_letters += gog.alphabet().is_edge(l.symbol);
    }
    std::size_t base_vertices = symbols + 1;
    std::size_t vertices = base_vertices * max_order + edge_letters * loop_edges;
    std::size_t edges = symbols + base_vertices * gog.max_cayley_edges() + edge_letters * loop_edges;
    return {vertices, edges};
}

}  // namespace

FoldedSubgroup build_subgroup_graph(const GraphOfGroups& gog, std::span<const Word> words,
                                    const FoldOptions& options, BuildStats* stats) {
    for (std::size_t i = 0; i < words.size(); ++i) {
        LoopCheck check = is_aloop(gog, words[i]);
        if (!check) throw NotALoop(i, check.position, check.reason);
    }
    AGraph ag(gog);
    auto [vertices, edges] = saturated_size(gog, words);
    ag.reserve(vertices, edges);
    AGraph::Vertex v0 = ag.add_vertex(true);
    ag.set_basepoint(v0);
    ag.assign(v0, gog.base_vertex());

    // Words are added, saturated and folded a chunk at a time. Folding is
    // confluent, so the result matches folding the whole saturated graph once.
    BuildStats local;
    AGraph::Vertex vertex_mark = 0;
    std::size_t i = 0;
    while (i < words.size() || vertex_mark == 0) {
        auto edge_mark = static_cast<AGraph::EdgeRef>(ag.allocated_edges());
        for (std::size_t symbols = 0; i < words.size() && symbols < build_chunk_symbols; ++i) {
            if (!words[i].empty()) ag.add_path(v0, words[i], v0, true);
            symbols += words[i].size();
            local.input_symbols += words[i].size();
        }
        auto path_end = static_cast<AGraph::EdgeRef>(ag.allocated_edges());
        local.bouquet_edges += path_end - edge_mark;
        saturate_vertices(ag, vertex_mark);
        saturate_edges(ag, edge_mark, path_end);
        vertex_mark = static_cast<AGraph::Vertex>(ag.allocated_vertices());
        FoldStats fs = ag.fold(options);
        local.fold.merges += fs.merges;
        local.fold.removed_edges += fs.removed_edges;
        local.fold.certified += fs.certified;
    }
    local.saturated_edges = ag.allocated_edges();
    if (stats) *stats = local;
    return FoldedSubgroup::from_graph(ag);
}

bool member(const FoldedSubgroup& fs, std::span<const Letter> word) {
    LoopCheck check = is_aloop(fs.gog(), word);
    if (!check) throw NotALoop(0, check.position, check.reason);
    if (!is_reduced(fs.gog(), word)) throw NotReduced("membership query needs a reduced word");
    auto end = fs.trace(word);
    return end && *end == fs.basepoint();
}

bool member_full(const FoldedSubgroup& fs, std::span<const Letter> word) {
    return member(fs, reduce_word(fs.gog(), word));
}

Word reduce_path(const GraphOfGroups& gog, std::span<const Letter> word, VertexId start) {
    LoopCheck check;
    if (!trace_path(gog, word, start, &check)) throw NotALoop(0, check.position, check.reason);

    AGraph ag(gog);
    AGraph::Vertex v0 = ag.add_vertex(true);
    ag.set_basepoint(v0);
    ag.assign(v0, start);
    AGraph::Vertex u0 = word.empty() ? v0 : ag.add_path(v0, word, std::nullopt, true);
    vertex_saturate(ag);
    edge_saturate(ag);
    ag.fold();

    std::vector<std::uint32_t> ids;
    const AGraph::Vertex ends[] = {v0, u0};
    FoldedSubgroup fs = FoldedSubgroup::from_graph(ag, ends, &ids);

    // Breadth-first search for a shortest path, smallest (label, direction) first.
    const std::uint32_t from = ids[0];
    const std::uint32_t to = ids[1];
    const SymbolId symbols = static_cast<SymbolId>(gog.alphabet().size());
    std::vector<std::int32_t> came_from(fs.vertex_count(), -1);
    std::vector<Letter> via(fs.vertex_count());
    std::vector<std::uint32_t> queue{from};
    came_from[from] = static_cast<std::int32_t>(from);
    for (std::size_t i = 0; i < queue.size() && came_from[to] < 0; ++i) {
        std::uint32_t v = queue[i];
        for (SymbolId s = 0; s < symbols; ++s)
            for (bool inverse : {false, true}) {
                Letter l{s, inverse};
                auto next = fs.step(v, l);
                if (!next || came_from[*next] >= 0) continue;
                came_from[*next] = static_cast<std::int32_t>(v);
                via[*next] = l;
                queue.push_back(*next);
            }
    }
    if (came_from[to] < 0) throw InvariantBreach("word endpoints disconnected after folding");
    Word out;
    for (std::uint32_t v = to; v != from; v = static_cast<std::uint32_t>(came_from[v])) out.push_back(via[v]);
    std::reverse(out.begin(), out.end());
    return out;
}

Word reduce_word(const GraphOfGroups& gog, std::span<const Letter> word) {
    LoopCheck check = is_aloop(gog, word);
    if (!check) throw NotALoop(0, check.position, check.reason);
    return reduce_path(gog, word, gog.base_vertex());
}

bool is_free_subgroup(const FoldedSubgroup& fs) {
    const GraphOfGroups& gog = fs.gog();
    const Alphabet& alpha = gog.alphabet();
    std::vector<char> seen(fs.vertex_count());
    std::vector<std::uint32_t> stack;
    for (std::uint32_t start = 0; start < fs.vertex_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        stack.assign(1, start);
        std::size_t size = 0;
        while (!stack.empty()) {
            std::uint32_t v = stack.back();
            stack.pop_back();
            ++size;
            for (SymbolId s = 0; s < alpha.size(); ++s) {
                if (alpha.is_edge(s)) continue;
                for (bool inverse : {false, true}) {
                    auto next = fs.step(v, {s, inverse});
                    if (next && !seen[*next]) {
                        seen[*next] = 1;
                        stack.push_back(*next);
                    }
                }
            }
        }
        if (size != gog.vertex_group(fs.assignment(start)).order()) return false;
    }
    return true;
}

bool subgroups_equal(const GraphOfGroups& gog, std::span<const Word> first, std::span<const Word> second) {
    auto reduce_all = [&gog](std::span<const Word> words, std::size_t offset) {
        std::vector<Word> out;
        for (std::size_t i = 0; i < words.size(); ++i) {
            LoopCheck check = is_aloop(gog, words[i]);
            if (!check) throw NotALoop(offset + i, check.position, check.reason);
            out.push_back(reduce_word(gog, words[i]));
        }
        return out;
    };
    std::vector<Word> a = reduce_all(first, 0);
    std::vector<Word> b = reduce_all(second, first.size());
    FoldedSubgroup fa = build_subgroup_graph(gog, a);
    FoldedSubgroup fb = build_subgroup_graph(gog, b);
    for (const Word& w : a)
        if (!member(fb, w)) return false;
    for (const Word& w : b)
        if (!member(fa, w)) return false;
    return true;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

void write_dot(std::ostream& out, const FoldedSubgroup& fs) {
    const GraphOfGroups& gog = fs.gog();
    out << "digraph folded {\n  node [shape=circle];\n";
    for (std::uint32_t v = 0; v < fs.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v << ":" << dot_escape(gog.data().vertices[fs.assignment(v)].name)
            << "\"";
        if (v == fs.basepoint()) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const auto& e : fs.edges())
        out << "  " << e.source << " -> " << e.target << " [label=\"" << dot_escape(gog.alphabet()[e.label].name)
            << "\"];\n";
    out << "}\n";
}

void write_dot(std::ostream& out, const AGraph& ag) {
    const GraphOfGroups& gog = ag.gog();
    std::vector<std::int32_t> canon(ag.allocated_vertices(), -1);
    std::vector<AGraph::Vertex> order{ag.basepoint()};
    canon[order[0]] = 0;
    struct Out {
        std::uint32_t key;
        std::uint32_t half;
        AGraph::Vertex far;
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> lines;  // (source id, edge)
    std::vector<Out> incident;
    for (std::size_t i = 0; i < order.size(); ++i) {
        incident.clear();
        for (std::uint32_t h : ag.half_edges(order[i]))
            incident.push_back({2 * ag.edges_[h >> 1].label + (h & 1), h, static_cast<AGraph::Vertex>(ag.far_end(h))});
        std::sort(incident.begin(), incident.end(),
                  [](const Out& a, const Out& b) { return a.key != b.key ? a.key < b.key : a.half < b.half; });
        for (const Out& o : incident)
            if (canon[o.far] < 0) {
                canon[o.far] = static_cast<std::int32_t>(order.size());
                order.push_back(o.far);
            }
    }
    out << "digraph agraph {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto a = ag.assignment(order[i]);
        out << "  " << i << " [label=\"" << i;
        if (a) out << ":" << dot_escape(gog.data().vertices[*a].name);
        out << "\"";
        if (i == 0) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        incident.clear();
        for (std::uint32_t h : ag.half_edges(order[i]))
            if ((h & 1) == 0) incident.push_back({2 * ag.edges_[h >> 1].label, h, static_cast<AGraph::Vertex>(ag.far_end(h))});
        std::sort(incident.begin(), incident.end(),
                  [](const Out& a, const Out& b) { return a.key != b.key ? a.key < b.key : a.half < b.half; });
        for (const Out& o : incident)
            out << "  " << i << " -> " << canon[o.far] << " [label=\""
                << dot_escape(gog.alphabet()[ag.edges_[o.half >> 1].label].name) << "\"];\n";
    }
    out << "}\n";
}

}  // namespace vfree
