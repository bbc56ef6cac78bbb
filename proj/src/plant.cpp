#include "rdes/plant.hpp"

#include <deque>

#include "rdes/errors.hpp"

namespace rdes {

void OpenDes::add_transition(const Name& from, const InputEvent& input,
                             const InternalEvent& event,
                             const OutputEvent& output, const Name& to) {
    TransKey key{from, input, event};
    auto [it, inserted] = transitions.emplace(key, TransValue{output, to});
    if (!inserted)
        throw ModelError("duplicate transition key (" + from + ", " +
                         input.to_string() + ", " + event.to_string() + ")");
}

std::vector<PlantMove> OpenDes::enabled_moves(const Name& state,
                                              const InputEvent& input) const {
    if (states.count(state) == 0)
        throw ModelError("unknown state: " + state);
    if (input_events.count(input) == 0)
        throw ModelError("undeclared input event: " + input.to_string());
    std::vector<PlantMove> moves;
    auto lo = transitions.lower_bound(TransKey{state, input, InternalEvent{}});
    for (auto it = lo; it != transitions.end(); ++it) {
        const auto& [from, in, ev] = it->first;
        if (from != state || !(in == input))
            break;
        moves.push_back({ev, it->second.first, it->second.second});
    }
    return moves;
}

std::set<Name> OpenDes::reachable_states() const {
    std::set<Name> seen{initial};
    std::deque<Name> frontier{initial};
    while (!frontier.empty()) {
        Name q = frontier.front();
        frontier.pop_front();
        auto lo = transitions.lower_bound(TransKey{q, InputEvent{}, InternalEvent{}});
        for (auto it = lo; it != transitions.end(); ++it) {
            if (std::get<0>(it->first) != q)
                break;
            const Name& next = it->second.second;
            if (seen.insert(next).second)
                frontier.push_back(next);
        }
    }
    return seen;
}

ValidationReport validate_plant(const OpenDes& plant) {
    ValidationReport report;

    auto reachable = plant.reachable_states();
    for (const auto& q : plant.states)
        if (reachable.count(q) == 0)
            report.unreachable.push_back(q);

    for (const auto& q : plant.states) {
        for (const auto& x : plant.input_events) {
            auto it = plant.transitions.lower_bound({q, x, InternalEvent{}});
            bool enabled = it != plant.transitions.end() &&
                           std::get<0>(it->first) == q &&
                           std::get<1>(it->first) == x;
            if (!enabled)
                report.not_input_enabled.push_back({q, x});
        }
    }

    for (const auto& e : plant.controllable)
        if (plant.uncontrollable.count(e) > 0)
            report.partition_violations.push_back(
                "event declared both controllable and uncontrollable: " + e);
    for (const auto& [key, value] : plant.transitions) {
        const auto& ev = std::get<2>(key);
        if (!ev.is_stutter() && plant.controllable.count(ev.name()) == 0 &&
            plant.uncontrollable.count(ev.name()) == 0)
            report.partition_violations.push_back(
                "internal event outside the declared partition: " + ev.name());
    }

    return report;
}

OpenDes complete_inputs(const OpenDes& plant) {
    OpenDes out = plant;
    for (const auto& q : plant.states) {
        for (const auto& x : plant.input_events) {
            auto it = out.transitions.lower_bound({q, x, InternalEvent{}});
            bool has_move = it != out.transitions.end() &&
                            std::get<0>(it->first) == q &&
                            std::get<1>(it->first) == x;
            if (!has_move)
                out.add_transition(q, x, InternalEvent::stutter(),
                                   OutputEvent::silent(), q);
        }
    }
    return out;
}

} // namespace rdes
