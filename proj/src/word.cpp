#include "vfree/word.hpp"

namespace vfree {

Word inverse_word(std::span<const Letter> word) {
    Word out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverted());
    return out;
}

Word free_reduce(std::span<const Letter> word) {
    Word out;
    out.reserve(word.size());
    for (const Letter& l : word) {
        if (!out.empty() && out.back() == l.inverted())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool is_freely_reduced(std::span<const Letter> word) {
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1].inverted()) return false;
    return true;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
    Word out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace vfree
