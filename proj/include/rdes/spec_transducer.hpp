#ifndef RDES_SPEC_TRANSDUCER_HPP_
#define RDES_SPEC_TRANSDUCER_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdes/events.hpp"
#include "rdes/words.hpp"

namespace rdes {

/// Deterministic Mealy transducer realizing a reactive specification: one
/// successor and one output per (state, input event).
class SpecTransducer {
public:
    using Key = std::pair<Name, InputEvent>;
    using Value = std::pair<OutputEvent, Name>;

    std::set<Name> states;
    Name initial;
    std::set<Name> marked;
    std::map<Key, Value> transitions;

    bool operator==(const SpecTransducer&) const = default;

    bool is_marked(const Name& state) const { return marked.count(state) > 0; }

    void add_transition(const Name& from, const InputEvent& input,
                        const OutputEvent& output, const Name& to);

    /// Successor/output lookup; empty when the input is not handled.
    std::optional<Value> step(const Name& state, const InputEvent& input) const;

    /// Input events handled at every state (the transducer's own alphabet).
    std::set<InputEvent> input_events() const;

    /// True when every state handles every event of `inputs`.
    bool is_input_complete(const std::set<InputEvent>& inputs) const;

    /// True when some marked state is reachable, i.e. the realized marked
    /// language is non-empty.
    bool has_marked_word() const;
};

/// The specification completed into a total acceptor over input/output
/// pairs. Pairs that the transducer does not produce route to an absorbing
/// reject sink; a word leaves the specification's prefix closure exactly
/// when its run reaches the sink.
class SafetyAutomaton {
public:
    /// States are indices into names(); bottom() is the reject sink.
    using State = int;

    SafetyAutomaton() = default;
    explicit SafetyAutomaton(SpecTransducer spec);

    State initial() const { return initial_; }
    State bottom() const { return static_cast<State>(names_.size()); }
    bool is_bottom(State s) const { return s == bottom(); }
    bool is_marked(State s) const;

    /// Total transition function; the sink is absorbing.
    State step(State s, const InputEvent& input, const OutputEvent& output) const;

    /// Runs a full input/output word from the initial state.
    State run(const IoWord& w) const;

    const std::vector<Name>& names() const { return names_; }
    const Name& name_of(State s) const;
    const SpecTransducer& spec() const { return spec_; }

    /// States (sink excluded) from which a marked state is reachable.
    std::vector<bool> coaccessible() const;

private:
    SpecTransducer spec_;
    std::vector<Name> names_;
    std::map<Name, State> index_;
    State initial_ = 0;
};

SafetyAutomaton complete_to_safety_automaton(const SpecTransducer& spec);

} // namespace rdes

#endif // RDES_SPEC_TRANSDUCER_HPP_
