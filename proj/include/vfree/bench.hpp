#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vfree/folding.hpp"
#include "vfree/graph_of_groups.hpp"

namespace vfree {

/// Iterated base-2 logarithm: applications of log2 until the value is <= 1.
unsigned log_star(double x);

/// A random A-loop at the base vertex with about `length` letters, built as a
/// walk that alternates vertex-generator runs with edge crossings.
Word random_aloop(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t length);

/// Random A-loops at the base whose lengths add up to about `total`.
std::vector<Word> random_workload(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t total,
                                  std::size_t word_length = 24);

struct BenchRow {
    std::size_t n = 0;              ///< input symbols
    std::size_t folded_vertices = 0;
    std::size_t repetitions = 0;
    double seconds = 0;             ///< mean wall time of one build
    double per_symbol = 0;          ///< seconds / (n log* n)
    double growth = 0;              ///< t(n) / t(previous n), 0 for the first row
};

struct BenchOptions {
    std::vector<std::size_t> sizes{10'000, 100'000, 1'000'000};
    std::uint64_t seed = 1;
    /// Builds repeat until this much time has been spent on one size.
    double min_seconds = 0.25;
};

std::vector<BenchRow> run_bench(const GraphOfGroups& gog, const BenchOptions& options = {});

}  // namespace vfree
