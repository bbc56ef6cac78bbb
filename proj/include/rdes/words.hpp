#ifndef RDES_WORDS_HPP_
#define RDES_WORDS_HPP_

#include <compare>
#include <string>
#include <vector>

#include "rdes/events.hpp"

namespace rdes {

/// One position of an extended word: the environment input consumed, the
/// internal event executed and the output emitted in that step.
struct ExtStep {
    InputEvent input;
    InternalEvent event;
    OutputEvent output;

    auto operator<=>(const ExtStep&) const = default;
};

struct IoStep {
    InputEvent input;
    OutputEvent output;

    auto operator<=>(const IoStep&) const = default;
};

struct XpStep {
    InputEvent input;
    InternalEvent event;

    auto operator<=>(const XpStep&) const = default;
};

/// Words are plain position sequences; the empty word is the empty vector.
using ExtendedWord = std::vector<ExtStep>;
using IoWord = std::vector<IoStep>;
using XpWord = std::vector<XpStep>;

/// Positionwise projections. Length is preserved: silent components keep
/// their position.
IoWord project_xy(const ExtendedWord& w);
XpWord project_xp(const ExtendedWord& w);

/// Component concatenations. Silent events contribute nothing, so the result
/// can be shorter than the word.
std::vector<InputEvent> project_x(const ExtendedWord& w);
std::vector<OutputEvent> project_y(const ExtendedWord& w);
std::vector<InternalEvent> project_p(const ExtendedWord& w);

/// One-line serializations, e.g. "({x1}|s1|{y1})({x1}|su|{y2})" for an
/// extended word. The empty word prints as "()".
std::string to_string(const ExtendedWord& w);
std::string to_string(const IoWord& w);
std::string to_string(const XpWord& w);
std::string to_string(const std::vector<EventSet>& w);
std::string to_string(const std::vector<InternalEvent>& w);

} // namespace rdes

#endif // RDES_WORDS_HPP_
