#ifndef RDES_LANGUAGE_HPP_
#define RDES_LANGUAGE_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "rdes/plant.hpp"
#include "rdes/words.hpp"

namespace rdes {

/// Hard cap on bounded language enumeration.
inline constexpr int kMaxEnumerationDepth = 12;

/// All extended words of length at most `depth`; with `marked_only`, those
/// whose run ends in a marked state. Output is sorted by length then by
/// canonical step order and is therefore deterministic.
/// Throws LimitError when `depth` exceeds kMaxEnumerationDepth.
std::vector<ExtendedWord> enumerate_extended(const OpenDes& plant, int depth,
                                             bool marked_only);

/// Input/output projection image of enumerate_extended, duplicates merged.
std::vector<IoWord> io_language(const OpenDes& plant, int depth,
                                bool marked_only);

/// Prefix closure of a finite word set, including the empty word.
template <typename Word>
std::set<Word> prefix_closure(const std::set<Word>& language) {
    std::set<Word> closed;
    for (const auto& w : language)
        for (size_t len = 0; len <= w.size(); ++len)
            closed.insert(Word(w.begin(), w.begin() + len));
    return closed;
}

template <typename Word>
bool is_prefix_closed(const std::set<Word>& language) {
    if (language.empty())
        return true;
    return prefix_closure(language) == language;
}

/// Depth-bounded check of the sequential input-output relation:
///   c1: every input word over the declared events is realized by some
///       extended word;
///   c2: input and output tracks of every extended word have equal position
///       counts (silent events occupy positions);
///   c3: the input/output language is prefix-closed.
/// The first failing word is reported in serialized form.
struct RelationReport {
    bool c1 = true;
    bool c2 = true;
    bool c3 = true;
    std::optional<std::string> witness;

    bool ok() const { return c1 && c2 && c3; }
};

RelationReport check_sequential_relation(const OpenDes& plant, int depth);

} // namespace rdes

#endif // RDES_LANGUAGE_HPP_
