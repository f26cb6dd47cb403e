#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace vfree {

using SymbolId = std::uint32_t;

/// A symbol or its formal inverse.
struct Letter {
    SymbolId symbol = 0;
    bool inverse = false;

    Letter inverted() const { return {symbol, !inverse}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Letter sym(SymbolId s) { return {s, false}; }
inline Letter inv(SymbolId s) { return {s, true}; }

/// The formal inverse: reversed, every letter inverted.
Word inverse_word(std::span<const Letter> word);

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(std::span<const Letter> word);

bool is_freely_reduced(std::span<const Letter> word);

Word concat(std::span<const Letter> a, std::span<const Letter> b);

}  // namespace vfree
