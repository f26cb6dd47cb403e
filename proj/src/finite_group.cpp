#include "vfree/finite_group.hpp"

#include <algorithm>
#include <string>

namespace vfree {

FiniteGroup FiniteGroup::from_mult_table(std::size_t order, Element identity,
                                         const std::vector<std::vector<Element>>& mult,
                                         std::vector<Generator> generators) {
    if (order == 0) throw TableNotAGroup("group order must be positive");
    if (identity >= order) throw TableNotAGroup("identity index out of range");
    if (mult.size() != order) throw TableNotAGroup("table has wrong number of rows");

    FiniteGroup g;
    g.order_ = order;
    g.identity_ = identity;
    g.mult_.resize(order * order);
    for (std::size_t i = 0; i < order; ++i) {
        if (mult[i].size() != order)
            throw TableNotAGroup("row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < order; ++j) {
            if (mult[i][j] >= order) throw TableNotAGroup("table entry out of range");
            g.mult_[i * order + j] = mult[i][j];
        }
    }

    std::vector<char> seen(order);
    for (std::size_t i = 0; i < order; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < order; ++j) {
            if (seen[g.mul(i, j)]++) throw TableNotAGroup("row " + std::to_string(i) + " is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t j = 0; j < order; ++j) {
            if (seen[g.mul(j, i)]++)
                throw TableNotAGroup("column " + std::to_string(i) + " is not a permutation");
        }
        if (g.mul(identity, i) != i || g.mul(i, identity) != i)
            throw TableNotAGroup("identity does not act trivially on " + std::to_string(i));
    }
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            for (std::size_t c = 0; c < order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw TableNotAGroup("associativity fails on (" + std::to_string(a) + ", " +
                                         std::to_string(b) + ", " + std::to_string(c) + ")");

    g.inv_.resize(order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (g.mul(a, b) == identity) g.inv_[a] = static_cast<Element>(b);

    return g.with_generators(std::move(generators));
}

FiniteGroup FiniteGroup::with_generators(std::vector<Generator> generators) const {
    FiniteGroup g = *this;
    std::vector<Element> gens;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].element >= order_)
            throw GeneratorsDontGenerate("generator '" + generators[i].symbol + "' out of range");
        for (std::size_t j = 0; j < i; ++j)
            if (generators[j].symbol == generators[i].symbol)
                throw GeneratorsDontGenerate("duplicate generator symbol '" + generators[i].symbol + "'");
        gens.push_back(generators[i].element);
    }
    g.generators_ = std::move(generators);
    if (subgroup_elements(g, gens).size() != order_)
        throw GeneratorsDontGenerate("generators do not generate the group of order " +
                                     std::to_string(order_));
    return g;
}

std::vector<std::vector<Element>> FiniteGroup::mult_table() const {
    std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) out[i][j] = mul(i, j);
    return out;
}

std::size_t FiniteGroup::element_order(Element g) const {
    std::size_t n = 1;
    for (Element x = g; x != identity_; x = mul(x, g)) ++n;
    return n;
}

Element evaluate_word(const FiniteGroup& group, std::span<const Letter> word) {
    Element acc = group.identity();
    for (const Letter& l : word) {
        if (l.symbol >= group.generators().size())
            throw ForeignSymbol("symbol " + std::to_string(l.symbol) + " is not a generator");
        Element x = group.generators()[l.symbol].element;
        acc = group.mul(acc, l.inverse ? group.inverse(x) : x);
    }
    return acc;
}

LabeledGraph cayley_graph(const FiniteGroup& group) {
    LabeledGraph g;
    g.vertex_count = group.order();
    g.basepoint = group.identity();
    const auto& gens = group.generators();
    for (Element x = 0; x < group.order(); ++x)
        for (SymbolId a = 0; a < gens.size(); ++a) {
            auto id = static_cast<std::uint32_t>(g.edges.size());
            g.edges.push_back({id, x, group.mul(x, gens[a].element), a});
        }
    return g;
}

std::vector<Element> subgroup_elements(const FiniteGroup& group, std::span<const Element> gens) {
    std::vector<char> in(group.order());
    std::vector<Element> members{group.identity()};
    in[group.identity()] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (Element g : gens) {
            for (Element y : {group.mul(members[i], g), group.mul(members[i], group.inverse(g))}) {
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Word> shortest_words(const FiniteGroup& group) {
    const auto& gens = group.generators();
    std::vector<Word> words(group.order());
    std::vector<char> done(group.order());
    std::vector<Element> queue{group.identity()};
    done[group.identity()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Element x = queue[i];
        for (bool inverse : {false, true}) {
            for (SymbolId a = 0; a < gens.size(); ++a) {
                Element step = inverse ? group.inverse(gens[a].element) : gens[a].element;
                Element y = group.mul(x, step);
                if (done[y]) continue;
                done[y] = 1;
                words[y] = words[x];
                words[y].push_back({a, inverse});
                queue.push_back(y);
            }
        }
    }
    return words;
}

}  // namespace vfree
