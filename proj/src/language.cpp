#include "rdes/language.hpp"

#include <deque>

#include "rdes/errors.hpp"

namespace rdes {

namespace {

void check_depth(int depth) {
    if (depth < 0)
        throw LimitError("enumeration depth must be non-negative");
    if (depth > kMaxEnumerationDepth)
        throw LimitError("enumeration depth " + std::to_string(depth) +
                         " exceeds the cap of " +
                         std::to_string(kMaxEnumerationDepth));
}

std::vector<PlantMove> moves_at(const OpenDes& plant, const Name& state,
                                const InputEvent& input) {
    std::vector<PlantMove> moves;
    auto lo = plant.transitions.lower_bound(
        OpenDes::TransKey{state, input, InternalEvent{}});
    for (auto it = lo; it != plant.transitions.end(); ++it) {
        const auto& [from, in, ev] = it->first;
        if (from != state || !(in == input))
            break;
        moves.push_back({ev, it->second.first, it->second.second});
    }
    return moves;
}

} // namespace

std::vector<ExtendedWord> enumerate_extended(const OpenDes& plant, int depth,
                                             bool marked_only) {
    check_depth(depth);

    struct Item {
        ExtendedWord word;
        Name state;
    };

    std::vector<ExtendedWord> result;
    std::deque<Item> frontier;
    frontier.push_back({{}, plant.initial});
    if (!marked_only || plant.is_marked(plant.initial))
        result.push_back({});

    // Breadth-first over word length; the declared events and the transition
    // map are both canonically ordered, so each layer comes out sorted.
    for (int len = 1; len <= depth; ++len) {
        std::deque<Item> next;
        for (const auto& item : frontier) {
            for (const auto& x : plant.input_events) {
                for (const auto& move : moves_at(plant, item.state, x)) {
                    ExtendedWord w = item.word;
                    w.push_back({x, move.event, move.output});
                    if (!marked_only || plant.is_marked(move.target))
                        result.push_back(w);
                    next.push_back({std::move(w), move.target});
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty())
            break;
    }

    std::sort(result.begin(), result.end(),
              [](const ExtendedWord& a, const ExtendedWord& b) {
                  if (a.size() != b.size())
                      return a.size() < b.size();
                  return a < b;
              });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<IoWord> io_language(const OpenDes& plant, int depth,
                                bool marked_only) {
    std::vector<IoWord> result;
    for (const auto& w : enumerate_extended(plant, depth, marked_only))
        result.push_back(project_xy(w));
    std::sort(result.begin(), result.end(), [](const IoWord& a, const IoWord& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

RelationReport check_sequential_relation(const OpenDes& plant, int depth) {
    check_depth(depth);
    RelationReport report;

    // c1: realizability of every input word. A run may interleave silent
    // input steps, so track the set of states reachable after consuming the
    // word so far, with closure under declared silent-input moves.
    std::vector<InputEvent> symbols;
    for (const auto& x : plant.input_events)
        if (!x.is_silent())
            symbols.push_back(x);
    bool declares_silent = plant.input_events.count(InputEvent::silent()) > 0;

    auto silent_closure = [&](std::set<Name> states) {
        if (!declares_silent)
            return states;
        std::deque<Name> frontier(states.begin(), states.end());
        while (!frontier.empty()) {
            Name q = frontier.front();
            frontier.pop_front();
            for (const auto& move : moves_at(plant, q, InputEvent::silent()))
                if (states.insert(move.target).second)
                    frontier.push_back(move.target);
        }
        return states;
    };

    struct C1Item {
        std::vector<InputEvent> word;
        std::set<Name> states;
    };
    std::deque<C1Item> c1_frontier;
    c1_frontier.push_back({{}, silent_closure({plant.initial})});
    for (int len = 1; len <= depth && report.c1; ++len) {
        std::deque<C1Item> next;
        for (const auto& item : c1_frontier) {
            for (const auto& x : symbols) {
                std::set<Name> targets;
                for (const auto& q : item.states)
                    for (const auto& move : moves_at(plant, q, x))
                        targets.insert(move.target);
                targets = silent_closure(std::move(targets));
                std::vector<InputEvent> word = item.word;
                word.push_back(x);
                if (targets.empty()) {
                    report.c1 = false;
                    report.witness = to_string(word);
                    break;
                }
                next.push_back({std::move(word), std::move(targets)});
            }
            if (!report.c1)
                break;
        }
        c1_frontier = std::move(next);
    }

    auto words = enumerate_extended(plant, depth, false);

    // c2: positional track lengths agree on every generated word. Silent
    // events occupy positions, so both tracks are read off the positionwise
    // projections.
    for (const auto& w : words) {
        size_t x_track = project_xp(w).size();
        size_t y_track = project_xy(w).size();
        if (x_track != y_track) {
            report.c2 = false;
            if (!report.witness)
                report.witness = to_string(w);
            break;
        }
    }

    // c3: prefix-closedness of the input/output language.
    std::set<IoWord> io;
    for (const auto& w : words)
        io.insert(project_xy(w));
    for (const auto& w : io) {
        if (w.empty())
            continue;
        IoWord prefix(w.begin(), w.end() - 1);
        if (io.count(prefix) == 0) {
            report.c3 = false;
            if (!report.witness)
                report.witness = to_string(w);
            break;
        }
    }

    return report;
}

} // namespace rdes
