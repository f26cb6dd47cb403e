#include "vfree/bench.hpp"

#include <chrono>
#include <cmath>

namespace vfree {

unsigned log_star(double x) {
    unsigned k = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++k;
    }
    return k;
}

Word random_aloop(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t length) {
    const Alphabet& alpha = gog.alphabet();
    std::vector<std::vector<SymbolId>> vertex_symbols(gog.vertex_count());
    std::vector<std::vector<Letter>> exits(gog.vertex_count());
    for (SymbolId s = 0; s < alpha.size(); ++s) {
        if (!alpha.is_edge(s)) {
            vertex_symbols[alpha[s].owner].push_back(s);
            continue;
        }
        const EdgeData& e = gog.edge(alpha[s].owner);
        exits[e.source].push_back({s, false});
        exits[e.target].push_back({s, true});
    }
    auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto endpoint = [&gog, &alpha](Letter l) {
        const EdgeData& e = gog.edge(alpha[l.symbol].owner);
        return l.inverse ? e.source : e.target;
    };

    Word out;
    std::vector<Letter> trail;
    VertexId at = gog.base_vertex();
    while (out.size() < length || at != gog.base_vertex()) {
        bool leave_home = out.size() < length;
        if (!vertex_symbols[at].empty() && pick(2) == 0) {
            out.push_back({vertex_symbols[at][pick(vertex_symbols[at].size())], pick(2) == 1});
            continue;
        }
        if (!leave_home) {
            // Walk back along the recorded crossings.
            Letter back = trail.back().inverted();
            trail.pop_back();
            out.push_back(back);
            at = endpoint(back);
            continue;
        }
        if (exits[at].empty()) {
            if (vertex_symbols[at].empty()) break;
            continue;
        }
        Letter l = exits[at][pick(exits[at].size())];
        if (!trail.empty() && trail.back() == l.inverted()) {
            trail.pop_back();
        } else {
            trail.push_back(l);
        }
        out.push_back(l);
        at = endpoint(l);
    }
    return out;
}

std::vector<Word> random_workload(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t total,
                                  std::size_t word_length) {
    std::vector<Word> out;
    std::size_t used = 0;
    while (used < total) {
        out.push_back(random_aloop(gog, rng, std::min(word_length, total - used)));
        used += std::max<std::size_t>(out.back().size(), 1);
    }
    return out;
}

std::vector<BenchRow> run_bench(const GraphOfGroups& gog, const BenchOptions& options) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    std::mt19937_64 rng(options.seed);
    for (std::size_t n : options.sizes) {
        std::vector<Word> words = random_workload(gog, rng, n);
        BenchRow row;
        for (const Word& w : words) row.n += w.size();
        double spent = 0;
        do {
            auto start = clock::now();
            FoldedSubgroup fs = build_subgroup_graph(gog, words);
            spent += std::chrono::duration<double>(clock::now() - start).count();
            row.folded_vertices = fs.vertex_count();
            ++row.repetitions;
        } while (spent < options.min_seconds);
        row.seconds = spent / static_cast<double>(row.repetitions);
        row.per_symbol = row.seconds / (static_cast<double>(row.n) * std::max(1u, log_star(static_cast<double>(row.n))));
        row.growth = rows.empty() ? 0 : row.seconds / rows.back().seconds;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace vfree
