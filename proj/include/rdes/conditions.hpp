#ifndef RDES_CONDITIONS_HPP_
#define RDES_CONDITIONS_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdes/plant.hpp"
#include "rdes/spec_transducer.hpp"
#include "rdes/words.hpp"

namespace rdes {

/// Input/output pairs realizable by some uncontrollable internal transition
/// (stutters included) anywhere in the plant.
using UncontrollableIoSet = std::set<std::pair<InputEvent, OutputEvent>>;

UncontrollableIoSet uncontrollable_io(const OpenDes& plant);

enum class ControllabilityMode { Literal, Local };

/// Verdict of a controllability or closedness check. Exactly one witness
/// field is populated when the check fails: an input/output word for
/// controllability, an output word for closedness.
struct CheckVerdict {
    bool holds = true;
    std::optional<IoWord> io_witness;
    std::optional<std::vector<OutputEvent>> output_witness;
    std::string method = "automaton-exact";
    std::optional<ControllabilityMode> mode;

    std::string witness_string() const;
};

/// Output controllability of the specification against the plant, decided
/// exactly on the product of the plant with the completed acceptor.
///
/// Literal mode flags any reachable in-specification state where a pair from
/// the uncontrollable input/output set is plant-realizable but rejected by
/// the specification. Local mode only flags pairs realized by an
/// uncontrollable transition at the reached plant state, the reading under
/// which a specification may rule out controllable alternatives.
CheckVerdict check_output_controllability(const OpenDes& plant,
                                          const SpecTransducer& spec,
                                          ControllabilityMode mode);

/// Closedness of the specification with respect to the plant's marked
/// input/output language, decided on the output projections of both sides
/// (subset construction on each). A failing verdict carries a shortest
/// output word in the symmetric difference.
CheckVerdict check_closedness(const OpenDes& plant, const SpecTransducer& spec);

} // namespace rdes

#endif // RDES_CONDITIONS_HPP_
