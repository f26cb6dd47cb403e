#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "vfree/finite_group.hpp"
#include "vfree/matrix.hpp"

using namespace vfree;
using namespace vfree::testing;

namespace {

// Words over a single group: symbol ids are generator positions.
Word gword(std::initializer_list<std::pair<SymbolId, bool>> letters) {
    Word w;
    for (auto [s, i] : letters) w.push_back({s, i});
    return w;
}

std::set<Element> closure_oracle(const FiniteGroup& g, const std::vector<Element>& gens) {
    std::set<Element> out{g.identity()};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Element> cur(out.begin(), out.end());
        for (Element x : cur)
            for (Element y : gens)
                if (out.insert(g.mul(x, y)).second) grew = true;
    }
    return out;
}

}  // namespace

TEST_CASE("cyclic table of order 4") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(c4.order() == 4);
    CHECK(c4.inverse(1) == 3);
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.element_order(2) == 2);
    CHECK(evaluate_word(c4, gword({{0, false}, {0, false}, {0, false}, {0, false}})) == c4.identity());
    CHECK(evaluate_word(c4, {}) == c4.identity());
    CHECK(evaluate_word(c4, gword({{0, false}, {0, true}, {0, false}})) == 1);
    CHECK_THROWS_AS(evaluate_word(c4, gword({{1, false}})), ForeignSymbol);
}

TEST_CASE("cyclic table of order 6") {
    FiniteGroup c6 = cyclic_group(6, "b");
    CHECK(c6.order() == 6);
    CHECK(c6.inverse(1) == 5);
    CHECK(c6.generators().front().symbol == "b");
}

TEST_CASE("bad tables are rejected") {
    SUBCASE("row not a permutation") {
        std::vector<std::vector<Element>> m{{0, 1}, {1, 1}};
        CHECK_THROWS_AS(FiniteGroup::from_mult_table(2, 0, m, {{"x", 1}}), TableNotAGroup);
    }
    SUBCASE("wrong identity") {
        std::vector<std::vector<Element>> m{{0, 1}, {1, 0}};
        CHECK_THROWS_AS(FiniteGroup::from_mult_table(2, 1, m, {{"x", 1}}), TableNotAGroup);
    }
    SUBCASE("not associative") {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        std::vector<std::vector<Element>> m{
            {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
        CHECK_THROWS_AS(FiniteGroup::from_mult_table(5, 0, m, {{"x", 1}, {"y", 2}}), TableNotAGroup);
    }
    SUBCASE("dimension mismatch") {
        std::vector<std::vector<Element>> m{{0, 1}, {1, 0}};
        CHECK_THROWS_AS(FiniteGroup::from_mult_table(3, 0, m, {}), TableNotAGroup);
    }
    SUBCASE("generators fall short") {
        FiniteGroup c4 = cyclic_group(4);
        CHECK_THROWS_AS(c4.with_generators({{"s", 2}}), GeneratorsDontGenerate);
    }
}

TEST_CASE("matrix closure of A, C, -I is dihedral of order 12") {
    Mat2 A = mat(1, -1, 0, -1), C = mat(0, 1, 1, 0), minus = mat(-1, 0, 0, -1);
    MatrixGroup d6 = matrix_closure({{"a", A}, {"c", C}, {"m", minus}});
    CHECK(d6.group.order() == 12);
    // Brute force: all integer matrices with entries in {-1,0,1} reachable as products.
    std::set<std::tuple<long, long, long, long>> brute{{1, 0, 0, 1}};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::tuple<long, long, long, long>> cur(brute.begin(), brute.end());
        for (auto [a, b, c, d] : cur)
            for (const Mat2& g : {A, C, minus}) {
                Mat2 x = mat(a, b, c, d) * g;
                if (brute.insert({x.a.get_si(), x.b.get_si(), x.c.get_si(), x.d.get_si()}).second) grew = true;
            }
    }
    CHECK(brute.size() == 12);
    for (const Mat2& x : d6.elements) {
        CHECK(abs(x.a) <= 1);
        CHECK(abs(x.b) <= 1);
        CHECK(abs(x.c) <= 1);
        CHECK(abs(x.d) <= 1);
    }
    // Identity first, table consistent with matrix products.
    CHECK(d6.elements[0] == Mat2::identity());
    for (Element i = 0; i < 12; ++i)
        for (Element j = 0; j < 12; ++j) CHECK(d6.elements[d6.group.mul(i, j)] == d6.elements[i] * d6.elements[j]);
}

TEST_CASE("cayley graphs") {
    SUBCASE("C4 with a") {
        LabeledGraph g = cayley_graph(cyclic_group(4));
        CHECK(g.vertex_count == 4);
        CHECK(g.edges.size() == 4);
        CHECK(g.basepoint == 0u);
    }
    SUBCASE("C4 with a and s = a^2") {
        FiniteGroup c4 = cyclic_group(4).with_generators({{"a", 1}, {"s", 2}});
        LabeledGraph g = cayley_graph(c4);
        CHECK(g.vertex_count == 4);
        CHECK(g.edges.size() == 8);
        std::size_t s_edges = 0;
        for (const auto& e : g.edges)
            if (e.label == 1) {
                ++s_edges;
                CHECK(e.target == (e.source + 2) % 4);
            }
        CHECK(s_edges == 4);
    }
    SUBCASE("D4 with two generators") {
        FiniteGroup d4 = dihedral_group(4, "b", "c");
        CHECK(d4.order() == 8);
        LabeledGraph g = cayley_graph(d4);
        CHECK(g.vertex_count == 8);
        CHECK(g.edges.size() == 16);
    }
}

TEST_CASE("cayley graphs are folded and trace evaluation") {
    std::mt19937_64 rng(7);
    std::vector<FiniteGroup> groups{cyclic_group(5), cyclic_group(12), dihedral_group(3), dihedral_group(6),
                                    cyclic_group(6).with_generators({{"x", 2}, {"y", 3}})};
    for (const FiniteGroup& g : groups) {
        LabeledGraph cay = cayley_graph(g);
        std::size_t gens = g.generators().size();
        std::vector<std::vector<int>> out(cay.vertex_count, std::vector<int>(gens, 0));
        std::vector<std::vector<int>> in(cay.vertex_count, std::vector<int>(gens, 0));
        for (const auto& e : cay.edges) {
            ++out[e.source][e.label];
            ++in[e.target][e.label];
        }
        for (std::size_t v = 0; v < cay.vertex_count; ++v)
            for (std::size_t s = 0; s < gens; ++s) {
                CHECK(out[v][s] == 1);
                CHECK(in[v][s] == 1);
            }
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t len = rng() % 51;
            Word w;
            for (std::size_t i = 0; i < len; ++i) w.push_back({static_cast<SymbolId>(rng() % gens), (rng() & 1) != 0});
            std::uint32_t at = *cay.basepoint;
            for (const Letter& l : w)
                for (const auto& e : cay.edges)
                    if (e.label == l.symbol && (l.inverse ? e.target : e.source) == at) {
                        at = l.inverse ? e.source : e.target;
                        break;
                    }
            CHECK(at == evaluate_word(g, w));
        }
    }
}

TEST_CASE("subgroup elements") {
    FiniteGroup c4 = cyclic_group(4);
    CHECK(subgroup_elements(c4, std::vector<Element>{2}) == std::vector<Element>{0, 2});
    CHECK(subgroup_elements(c4, std::vector<Element>{3}) == std::vector<Element>{0, 1, 2, 3});
    CHECK(subgroup_elements(c4, std::vector<Element>{}) == std::vector<Element>{0});

    Mat2 A = mat(1, -1, 0, -1), C = mat(0, 1, 1, 0), minus = mat(-1, 0, 0, -1);
    MatrixGroup d6 = matrix_closure({{"a", A}, {"c", C}, {"m", minus}});
    CHECK(C * C == Mat2::identity());
    Element c = d6.group.generators()[1].element;
    auto sub = subgroup_elements(d6.group, std::vector<Element>{c});
    REQUIRE(sub.size() == 2);
    CHECK(d6.elements[sub[0]] == Mat2::identity());
    CHECK(d6.elements[sub[1]] == C);

    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 6; ++n)
        for (const FiniteGroup& g : {cyclic_group(2 * n), dihedral_group(n + 1)}) {
            std::vector<Element> all;
            for (const auto& gen : g.generators()) all.push_back(gen.element);
            CHECK(subgroup_elements(g, all).size() == g.order());
            for (int t = 0; t < 10; ++t) {
                std::vector<Element> gens;
                for (std::size_t k = rng() % 3; k > 0; --k) gens.push_back(static_cast<Element>(rng() % g.order()));
                auto got = subgroup_elements(g, gens);
                auto want = closure_oracle(g, gens);
                CHECK(std::set<Element>(got.begin(), got.end()) == want);
            }
        }
}

TEST_CASE("shortest words evaluate correctly and are shortest") {
    FiniteGroup c6 = cyclic_group(6, "b").with_generators({{"b", 1}, {"z", 3}});
    auto words = shortest_words(c6);
    REQUIRE(words.size() == 6);
    for (Element g = 0; g < 6; ++g) CHECK(evaluate_word(c6, words[g]) == g);
    CHECK(words[0].empty());
    CHECK(words[3].size() == 1);
    CHECK(words[2].size() == 2);
}
