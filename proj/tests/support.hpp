#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "vfree/finite_group.hpp"
#include "vfree/folding.hpp"
#include "vfree/graph_of_groups.hpp"
#include "vfree/matrix.hpp"
#include "vfree/text.hpp"

namespace vfree::testing {

inline Word W(const GraphOfGroups& gog, std::string_view text) { return parse_word(gog.alphabet(), text); }
inline Word W(const Preset& p, std::string_view text) { return parse_word(p.gog.alphabet(), text); }
inline std::vector<Word> Ws(const GraphOfGroups& gog, std::initializer_list<std::string_view> texts) {
    std::vector<Word> out;
    for (auto t : texts) out.push_back(W(gog, t));
    return out;
}

/// Z/n with generator 1 named `symbol`.
FiniteGroup cyclic_group(std::size_t n, const std::string& symbol = "a");
/// Dihedral group of order 2n: element r^i s^j is i + n*j. Generators r, s.
FiniteGroup dihedral_group(std::size_t n, const std::string& r = "r", const std::string& s = "s");

/// One vertex "u", no edges.
GraphOfGroups single_vertex_gog(const FiniteGroup& group);
/// One trivial vertex with k loop edges e1..ek (trivial edge groups).
GraphOfGroups free_gog(std::size_t k);

/// Textbook Stallings folding over a free basis, quadratic and list based.
/// Letters are (generator index, inverse).
class NaiveFreeFold {
public:
    explicit NaiveFreeFold(const std::vector<Word>& generators);
    bool accepts(const Word& word) const;
    std::size_t vertex_count() const { return vertices_; }

private:
    struct Edge {
        std::size_t from, to;
        SymbolId label;
    };
    std::vector<Edge> edges_;
    std::size_t vertices_ = 1;
};

/// Smallest syllable length reachable by repeatedly removing pinches
/// e W e^-1 (W in t_e) and e^-1 V e (V in i_e), rescanning from the start
/// after every rewrite.
std::size_t naive_min_syllables(const GraphOfGroups& gog, const Word& word);

/// Product of the letters of a vertex-letter run, using the tables directly.
Element run_value(const GraphOfGroups& gog, VertexId v, const Word& run);

/// Random A-path of `length` letters from the base, followed by the way back
/// to the base in the underlying graph.
Word random_loop(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t length);

/// Loops at the base: base generators and e x e^-1 for edges leaving the base
/// (with the inverse orientation for edges entering it).
std::vector<Word> basic_loops(const GraphOfGroups& gog);

/// Product of `count` random basic loops or their inverses.
Word random_generator_product(const GraphOfGroups& gog, std::mt19937_64& rng, std::size_t count);

/// Encoded word length is at most c0 * coefficient sum + c1 (measured once).
inline constexpr long word_length_c0 = 4;
inline constexpr long word_length_c1 = 4;

/// Matrix reduced mod m, entries in [0, m).
struct ModMat {
    int a, b, c, d;
    friend auto operator<=>(const ModMat&, const ModMat&) = default;
};
ModMat reduce_mod(const Mat2& x, int m);
/// Image of the subgroup generated by `gens` in GL(2, Z/m).
std::set<ModMat> congruence_image(const std::vector<Mat2>& gens, int m);
/// Some m in {2, 3, 4} whose quotient separates target from the subgroup, or 0.
int congruence_obstruction(const Mat2& target, const std::vector<Mat2>& gens);

/// A random product of the preset's vertex-symbol matrices of length <= `max_length`.
Mat2 random_preset_matrix(const Preset& p, std::mt19937_64& rng, std::size_t max_length);

/// Bounded torsion search: conjugates g x g^-1 of nontrivial vertex-group
/// elements by A-paths g of length <= `depth`, deduplicated by matrix value,
/// tested for membership. True when a torsion element of the subgroup is found.
bool torsion_search(const Preset& p, const FoldedSubgroup& fs, std::size_t depth);

}  // namespace vfree::testing
