#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vfree/folding.hpp"
#include "vfree/graph_of_groups.hpp"
#include "vfree/word.hpp"

namespace vfree {

/// Row-major 2x2 integer matrix (a b; c d).
struct Mat2 {
    mpz_class a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }
    mpz_class det() const { return a * d - b * c; }
    bool unimodular() const;
    /// Inverse of a unimodular matrix.
    Mat2 inverse() const;
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    /// |a| + |b| + |c| + |d|.
    mpz_class coefficient_sum() const;
    std::string str() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y);
};

Mat2 mat(long a, long b, long c, long d);

/// Parses "[[a,b],[c,d]]" with optional whitespace.
Mat2 parse_matrix(std::string_view text);

/// Finite matrix group enumerated by closure; `elements[i]` is element i.
struct MatrixGroup {
    FiniteGroup group;
    std::vector<Mat2> elements;
};

MatrixGroup matrix_closure(const std::vector<std::pair<std::string, Mat2>>& generators);

/// A graph of groups whose fundamental group at the base vertex is
/// identified with a group of 2x2 integer matrices.
struct Preset {
    std::string name;
    GraphOfGroups gog;
    /// Matrix of every alphabet symbol; edge symbols map to the identity.
    std::vector<Mat2> symbol_matrices;
    /// Words are confined to det +1.
    bool special_linear = false;
    /// Named constant matrices (A, B, C, E, F, ...).
    std::map<std::string, Mat2> constants;
    /// Words at the base vertex for the constants.
    std::map<std::string, Word> constant_words;
};

/// SL(2,Z) as C4 *_{C2} C6.
const Preset& sl2z_preset();
/// GL(2,Z) as D6 *_{D2} D4.
const Preset& gl2z_preset();

Mat2 word_to_matrix(const Preset& preset, std::span<const Letter> word);

/// An A-loop at the base vertex evaluating to `m`, by row reduction.
/// Throws NotUnimodular, or DetMismatch for det -1 in an SL preset.
Word matrix_to_word(const Preset& preset, const Mat2& m);

/// Whether `target` lies in the subgroup generated by `generators`.
bool matrix_member(const Preset& preset, const Mat2& target, std::span<const Mat2> generators);

}  // namespace vfree
