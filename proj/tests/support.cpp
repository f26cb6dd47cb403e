#include "support.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace vfree::testing {

FiniteGroup cyclic_group(std::size_t n, const std::string& symbol) {
    std::vector<std::vector<Element>> mult(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult[i][j] = static_cast<Element>((i + j) % n);
    std::vector<FiniteGroup::Generator> gens;
    if (n > 1) gens.push_back({symbol, 1});
    return FiniteGroup::from_mult_table(n, 0, mult, gens);
}

FiniteGroup dihedral_group(std::size_t n, const std::string& r, const std::string& s) {
    std::size_t order = 2 * n;
    std::vector<std::vector<Element>> mult(order, std::vector<Element>(order));
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
            std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
            mult[x][y] = static_cast<Element>(rot + n * ((j + l) % 2));
        }
    return FiniteGroup::from_mult_table(order, 0, mult, {{r, 1}, {s, static_cast<Element>(n)}});
}

GraphOfGroups single_vertex_gog(const FiniteGroup& group) {
    GraphOfGroupsData d;
    d.vertices.push_back({"u", group});
    return augment_edge_image_generators(GraphOfGroups::from_data(d));
}

GraphOfGroups free_gog(std::size_t k) {
    GraphOfGroupsData d;
    d.vertices.push_back({"u", FiniteGroup()});
    for (std::size_t i = 1; i <= k; ++i) d.edges.push_back({"e" + std::to_string(i), 0, 0, FiniteGroup(), {0}, {0}});
    return augment_edge_image_generators(GraphOfGroups::from_data(d));
}

NaiveFreeFold::NaiveFreeFold(const std::vector<Word>& generators) {
    for (const Word& w : generators) {
        std::size_t at = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t next = i + 1 == w.size() ? 0 : vertices_++;
            if (w[i].inverse)
                edges_.push_back({next, at, w[i].symbol});
            else
                edges_.push_back({at, next, w[i].symbol});
            at = next;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < edges_.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < edges_.size() && !changed; ++j) {
                const Edge& x = edges_[i];
                const Edge& y = edges_[j];
                if (x.label != y.label) continue;
                std::size_t keep, drop;
                if (x.from == y.from) {
                    keep = x.to, drop = y.to;
                } else if (x.to == y.to) {
                    keep = x.from, drop = y.from;
                } else {
                    continue;
                }
                edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(j));
                if (keep != drop) {
                    if (drop < keep) std::swap(keep, drop);
                    for (Edge& e : edges_) {
                        if (e.from == drop) e.from = keep;
                        if (e.to == drop) e.to = keep;
                    }
                }
                changed = true;
            }
    }
}

bool NaiveFreeFold::accepts(const Word& word) const {
    Word w = free_reduce(word);
    std::size_t at = 0;
    for (const Letter& l : w) {
        bool moved = false;
        for (const Edge& e : edges_) {
            if (e.label != l.symbol) continue;
            if (!l.inverse && e.from == at) {
                at = e.to;
                moved = true;
                break;
            }
            if (l.inverse && e.to == at) {
                at = e.from;
                moved = true;
                break;
            }
        }
        if (!moved) return false;
    }
    return at == 0;
}

Element run_value(const GraphOfGroups& gog, VertexId v, const Word& run) {
    const FiniteGroup& g = gog.vertex_group(v);
    Element x = g.identity();
    for (const Letter& l : run) {
        const auto& s = gog.alphabet()[l.symbol];
        Element y = g.generators()[s.local].element;
        x = g.mul(x, l.inverse ? g.inverse(y) : y);
    }
    return x;
}

namespace {

std::optional<Element> preimage(const std::vector<Element>& map, Element g) {
    for (std::size_t h = 0; h < map.size(); ++h)
        if (map[h] == g) return static_cast<Element>(h);
    return std::nullopt;
}

}  // namespace

std::size_t naive_min_syllables(const GraphOfGroups& gog, const Word& word) {
    const Alphabet& alpha = gog.alphabet();
    struct Part {
        VertexId at;
        Element value;
    };
    std::vector<Part> runs;
    std::vector<Letter> crossings;
    VertexId at = gog.base_vertex();
    runs.push_back({at, gog.vertex_group(at).identity()});
    for (const Letter& l : word) {
        if (alpha.is_edge(l.symbol)) {
            const EdgeData& e = gog.edge(alpha[l.symbol].owner);
            at = l.inverse ? e.source : e.target;
            crossings.push_back(l);
            runs.push_back({at, gog.vertex_group(at).identity()});
        } else {
            Part& p = runs.back();
            p.value = gog.vertex_group(p.at).mul(p.value, run_value(gog, p.at, Word{l}));
        }
    }
    for (;;) {
        bool rewrote = false;
        for (std::size_t j = 0; j + 1 < crossings.size(); ++j) {
            const Letter x = crossings[j];
            const Letter y = crossings[j + 1];
            if (x.symbol != y.symbol || x.inverse == y.inverse) continue;
            const EdgeData& e = gog.edge(alpha[x.symbol].owner);
            const Part& mid = runs[j + 1];
            // e W e^-1 needs W in t_e; e^-1 V e needs V in i_e.
            auto h = x.inverse ? preimage(e.source_map, mid.value) : preimage(e.target_map, mid.value);
            if (!h) continue;
            Element outer = x.inverse ? e.target_map[*h] : e.source_map[*h];
            const FiniteGroup& g = gog.vertex_group(runs[j].at);
            Element merged = g.mul(g.mul(runs[j].value, outer), runs[j + 2].value);
            runs[j].value = merged;
            runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(j) + 1, runs.begin() + static_cast<std::ptrdiff_t>(j) + 3);
            crossings.erase(crossings.begin() + static_cast<std::ptrdiff_t>(j),
                            crossings.begin() + static_cast<std::ptrdiff_t>(j) + 2);
            rewrote = true;
            break;
        }
        if (!rewrote) return crossings.size();
    }
}

Word random_loop(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t length) {
    const Alphabet& alpha = gog.alphabet();
    auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    Word out;
    std::vector<Letter> trail;
    VertexId at = gog.base_vertex();
    while (out.size() < length) {
        std::vector<Letter> options;
        for (SymbolId s = 0; s < alpha.size(); ++s) {
            if (alpha.is_edge(s)) {
                const EdgeData& e = gog.edge(alpha[s].owner);
                if (e.source == at) options.push_back({s, false});
                if (e.target == at) options.push_back({s, true});
            } else if (alpha[s].owner == at) {
                options.push_back({s, false});
                options.push_back({s, true});
            }
        }
        if (options.empty()) break;
        Letter l = options[pick(options.size())];
        out.push_back(l);
        if (alpha.is_edge(l.symbol)) {
            const EdgeData& e = gog.edge(alpha[l.symbol].owner);
            at = l.inverse ? e.source : e.target;
            // The trail is the way home in the underlying graph; loops need no return.
            if (e.source == e.target) continue;
            if (!trail.empty() && trail.back() == l.inverted())
                trail.pop_back();
            else
                trail.push_back(l);
        }
    }
    while (!trail.empty()) {
        out.push_back(trail.back().inverted());
        trail.pop_back();
    }
    return out;
}

std::vector<Word> basic_loops(const GraphOfGroups& gog) {
    const Alphabet& alpha = gog.alphabet();
    VertexId base = gog.base_vertex();
    std::vector<Word> out;
    for (SymbolId s = 0; s < alpha.size(); ++s)
        if (!alpha.is_edge(s) && alpha[s].owner == base) out.push_back({sym(s)});
    for (SymbolId s = 0; s < alpha.size(); ++s) {
        if (!alpha.is_edge(s)) continue;
        const EdgeData& e = gog.edge(alpha[s].owner);
        for (int dir = 0; dir < 2; ++dir) {
            VertexId from = dir == 0 ? e.source : e.target;
            VertexId to = dir == 0 ? e.target : e.source;
            if (from != base) continue;
            Letter cross{s, dir == 1};
            out.push_back({cross, cross.inverted()});
            for (SymbolId t = 0; t < alpha.size(); ++t)
                if (!alpha.is_edge(t) && alpha[t].owner == to) out.push_back({cross, sym(t), cross.inverted()});
        }
    }
    return out;
}

Word random_generator_product(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t count) {
    std::vector<Word> loops = basic_loops(gog);
    Word out;
    for (std::size_t i = 0; i < count; ++i) {
        const Word& w = loops[std::uniform_int_distribution<std::size_t>(0, loops.size() - 1)(rng)];
        Word piece = (rng() & 1) ? inverse_word(w) : w;
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

ModMat reduce_mod(const Mat2& x, int m) {
    auto r = [m](const mpz_class& v) {
        mpz_class q = v % m;
        if (q < 0) q += m;
        return static_cast<int>(q.get_si());
    };
    return {r(x.a), r(x.b), r(x.c), r(x.d)};
}

std::set<ModMat> congruence_image(const std::vector<Mat2>& gens, int m) {
    auto mul = [m](const ModMat& x, const ModMat& y) {
        return ModMat{(x.a * y.a + x.b * y.c) % m, (x.a * y.b + x.b * y.d) % m, (x.c * y.a + x.d * y.c) % m,
                      (x.c * y.b + x.d * y.d) % m};
    };
    std::vector<ModMat> g;
    for (const Mat2& x : gens) g.push_back(reduce_mod(x, m));
    std::set<ModMat> seen{ModMat{1 % m, 0, 0, 1 % m}};
    std::deque<ModMat> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        ModMat x = queue.front();
        queue.pop_front();
        for (const ModMat& y : g) {
            ModMat z = mul(x, y);
            if (seen.insert(z).second) queue.push_back(z);
        }
    }
    return seen;
}

int congruence_obstruction(const Mat2& target, const std::vector<Mat2>& gens) {
    for (int m : {2, 3, 4})
        if (!congruence_image(gens, m).count(reduce_mod(target, m))) return m;
    return 0;
}

Mat2 random_preset_matrix(const Preset& p, std::mt19937_64& rng, std::size_t max_length) {
    const Alphabet& alpha = p.gog.alphabet();
    std::vector<SymbolId> vertex_symbols;
    for (SymbolId s = 0; s < alpha.size(); ++s)
        if (!alpha.is_edge(s)) vertex_symbols.push_back(s);
    std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
    Mat2 out;
    for (std::size_t i = 0; i < n; ++i) {
        const Mat2& x = p.symbol_matrices[vertex_symbols[rng() % vertex_symbols.size()]];
        out = out * ((rng() & 1) ? x.inverse() : x);
    }
    return out;
}

namespace {

std::tuple<std::string, std::string, std::string, std::string> key_of(const Mat2& m) {
    return {m.a.get_str(), m.b.get_str(), m.c.get_str(), m.d.get_str()};
}

bool prime(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

bool torsion_search(const Preset& p, const FoldedSubgroup& fs, std::size_t depth) {
    const GraphOfGroups& gog = p.gog;
    const Alphabet& alpha = gog.alphabet();
    struct Node {
        Word prefix;
        VertexId at;
        std::size_t dist;
    };
    // Cosets g A_v, keyed by vertex and the smallest matrix in the coset.
    auto coset_key = [&](const Word& g, VertexId v) {
        Mat2 base = word_to_matrix(p, g);
        auto best = key_of(base);
        const FiniteGroup& grp = gog.vertex_group(v);
        for (Element y = 0; y < grp.order(); ++y)
            best = std::min(best, key_of(base * word_to_matrix(p, gog.element_word(v, y))));
        return std::make_pair(v, best);
    };
    std::set<decltype(coset_key(Word{}, 0))> seen;
    std::deque<Node> queue{{{}, gog.base_vertex(), 0}};
    seen.insert(coset_key({}, gog.base_vertex()));
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        const FiniteGroup& grp = gog.vertex_group(n.at);
        for (Element x = 0; x < grp.order(); ++x) {
            if (!prime(grp.element_order(x))) continue;
            Word probe = concat(concat(n.prefix, gog.element_word(n.at, x)), inverse_word(n.prefix));
            if (member_full(fs, probe)) return true;
        }
        if (n.dist == depth) continue;
        for (SymbolId s = 0; s < alpha.size(); ++s) {
            if (!alpha.is_edge(s)) continue;
            const EdgeData& e = gog.edge(alpha[s].owner);
            for (int dir = 0; dir < 2; ++dir) {
                if ((dir == 0 ? e.source : e.target) != n.at) continue;
                VertexId to = dir == 0 ? e.target : e.source;
                for (Element y = 0; y < grp.order(); ++y) {
                    Word next = concat(n.prefix, gog.element_word(n.at, y));
                    next.push_back({s, dir == 1});
                    if (seen.insert(coset_key(next, to)).second) queue.push_back({next, to, n.dist + 1});
                }
            }
        }
    }
    return false;
}

}  // namespace vfree::testing
