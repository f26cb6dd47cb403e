#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vfree/errors.hpp"
#include "vfree/word.hpp"

namespace vfree {

using Element = std::uint32_t;

/// Upper bound on groups enumerated by FiniteGroup::from_closure.
inline constexpr std::size_t max_closure_order = 1024;

/// A finite group given by its multiplication table.
///
/// Elements are the indices 0..order-1. The group also carries an ordered
/// list of named generators; words over the group use the generator's
/// position in that list as their symbol id.
class FiniteGroup {
public:
    struct Generator {
        std::string symbol;
        Element element;
        friend bool operator==(const Generator&, const Generator&) = default;
    };

    /// Validates the table (permutation rows/columns, identity, associativity)
    /// and that the generators reach every element.
    static FiniteGroup from_mult_table(std::size_t order, Element identity,
                                       const std::vector<std::vector<Element>>& mult,
                                       std::vector<Generator> generators);

    /// Enumerates the closure of `gens` under `mul`, identity first and then in
    /// breadth-first order over the generator list. When `elements` is given it
    /// receives the enumerated values in index order.
    template <class T, class Mul>
    static FiniteGroup from_closure(const T& identity,
                                    const std::vector<std::pair<std::string, T>>& gens, Mul mul,
                                    std::vector<T>* elements = nullptr);

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    Element mul(Element g, Element h) const { return mult_[g * order_ + h]; }
    Element inverse(Element g) const { return inv_[g]; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::vector<std::vector<Element>> mult_table() const;

    /// Order of `g` as a group element.
    std::size_t element_order(Element g) const;

    /// Same table with a different generator list (validated).
    FiniteGroup with_generators(std::vector<Generator> generators) const;

    friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

    /// The trivial group with no generators.
    FiniteGroup() = default;

private:
    std::size_t order_ = 1;
    Element identity_ = 0;
    std::vector<Element> mult_{0};
    std::vector<Element> inv_{0};
    std::vector<Generator> generators_;
};

/// Product of the word's letters; symbol ids index `group.generators()`.
Element evaluate_word(const FiniteGroup& group, std::span<const Letter> word);

/// A directed labelled graph. Labels are symbol ids of the owning alphabet.
struct LabeledGraph {
    struct Edge {
        std::uint32_t id;
        std::uint32_t source;
        std::uint32_t target;
        SymbolId label;
    };
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::optional<std::uint32_t> basepoint;
};

/// Right Cayley graph: vertex per element, edge g -> g*a labelled with the
/// generator index of a. Basepoint is the identity.
LabeledGraph cayley_graph(const FiniteGroup& group);

/// Sorted elements of the subgroup generated by `gens`.
std::vector<Element> subgroup_elements(const FiniteGroup& group, std::span<const Element> gens);

/// Shortest words over generators^{+-1} for every element, found by
/// breadth-first search in the Cayley graph. Positive letters are tried
/// before inverse letters, each in generator order.
std::vector<Word> shortest_words(const FiniteGroup& group);

template <class T, class Mul>
FiniteGroup FiniteGroup::from_closure(const T& identity,
                                      const std::vector<std::pair<std::string, T>>& gens, Mul mul,
                                      std::vector<T>* elements) {
    std::vector<T> elems{identity};
    auto index_of = [&elems](const T& x) -> std::optional<Element> {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == x) return static_cast<Element>(i);
        return std::nullopt;
    };
    std::deque<Element> queue{0};
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (const auto& [name, g] : gens) {
            T y = mul(elems[x], g);
            if (!index_of(y)) {
                if (elems.size() >= max_closure_order)
                    throw TableNotAGroup("closure exceeds " + std::to_string(max_closure_order) + " elements");
                elems.push_back(y);
                queue.push_back(static_cast<Element>(elems.size() - 1));
            }
        }
    }
    std::size_t n = elems.size();
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto k = index_of(mul(elems[i], elems[j]));
            if (!k) throw TableNotAGroup("closure is not closed under multiplication");
            table[i][j] = *k;
        }
    std::vector<Generator> generators;
    for (const auto& [name, g] : gens) generators.push_back({name, *index_of(g)});
    if (elements) *elements = elems;
    return from_mult_table(n, 0, table, std::move(generators));
}

}  // namespace vfree
