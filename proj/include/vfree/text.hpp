#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vfree/graph_of_groups.hpp"
#include "vfree/word.hpp"

namespace vfree {

/// Whitespace-separated tokens `x`, `x^-1` or `x^k` for a nonzero integer k.
/// Throws UnknownSymbol or BadExponent.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Semicolon-separated words.
std::vector<Word> parse_word_list(const Alphabet& alphabet, std::string_view text);

/// One word per line; blank lines and lines starting with '#' are skipped.
std::vector<Word> parse_word_lines(const Alphabet& alphabet, std::string_view text);

/// Tokens separated by single spaces; inverse letters as `x^-1`.
std::string format_word(const Alphabet& alphabet, std::span<const Letter> word);

inline constexpr int spec_format_version = 1;

/// Parses the JSON spec format into validated, augmented form.
/// Throws ParseError or ValidationError.
GraphOfGroups parse_spec(std::string_view json_text);
GraphOfGroups load_spec(const std::filesystem::path& path);

/// JSON spec text (multiplication-table form) that parses back to `gog`.
std::string serialize_spec(const GraphOfGroups& gog);

}  // namespace vfree
