#ifndef RDES_PLANT_HPP_
#define RDES_PLANT_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rdes/events.hpp"
#include "rdes/words.hpp"

namespace rdes {

/// One resolved plant move: the internal event that fired, the emitted
/// output and the successor state.
struct PlantMove {
    InternalEvent event;
    OutputEvent output;
    Name target;

    auto operator<=>(const PlantMove&) const = default;
};

/// The uncontrolled open plant. Immutable once built; every mutating
/// operation returns a new model.
///
/// Transitions are keyed by (state, input event, internal event) and map to
/// (output event, successor), so the transition relation is deterministic by
/// construction. The declared input events are the exact set of environment
/// moves; they are not expanded to the full powerset of the input alphabet.
class OpenDes {
public:
    using TransKey = std::tuple<Name, InputEvent, InternalEvent>;
    using TransValue = std::pair<OutputEvent, Name>;
    using TransMap = std::map<TransKey, TransValue>;

    std::set<Name> states;
    Name initial;
    std::set<Name> marked;
    std::set<Name> input_alphabet;
    std::set<Name> output_alphabet;
    std::set<InputEvent> input_events;
    std::set<Name> controllable;
    std::set<Name> uncontrollable;
    TransMap transitions;

    bool operator==(const OpenDes&) const = default;

    bool is_marked(const Name& state) const { return marked.count(state) > 0; }

    /// A stutter event counts as uncontrollable: no pattern may disable it.
    bool is_uncontrollable(const InternalEvent& e) const {
        return e.is_stutter() || uncontrollable.count(e.name()) > 0;
    }

    /// Adds a transition, rejecting duplicate (state, input, event) keys.
    void add_transition(const Name& from, const InputEvent& input,
                        const InternalEvent& event, const OutputEvent& output,
                        const Name& to);

    /// All moves enabled at (state, input), in canonical event order.
    /// Throws ModelError for an unknown state or undeclared input event.
    std::vector<PlantMove> enabled_moves(const Name& state,
                                         const InputEvent& input) const;

    /// States reachable from the initial state.
    std::set<Name> reachable_states() const;
};

/// Validation verdicts. Never throws: a bad plant yields a non-ok report.
struct ValidationReport {
    std::vector<Name> unreachable;
    std::vector<std::pair<Name, InputEvent>> not_input_enabled;
    std::vector<std::string> partition_violations;

    bool ok() const {
        return unreachable.empty() && not_input_enabled.empty() &&
               partition_violations.empty();
    }
};

ValidationReport validate_plant(const OpenDes& plant);

/// Returns a copy where every (state, declared input) pair without a
/// transition gains a silent stutter self-loop. Existing transitions are
/// untouched; the result is input-enabled and the operation is idempotent.
OpenDes complete_inputs(const OpenDes& plant);

} // namespace rdes

#endif // RDES_PLANT_HPP_
