#include "rdes/spec_transducer.hpp"

#include <deque>

#include "rdes/errors.hpp"

namespace rdes {

void SpecTransducer::add_transition(const Name& from, const InputEvent& input,
                                    const OutputEvent& output, const Name& to) {
    auto [it, inserted] = transitions.emplace(Key{from, input}, Value{output, to});
    if (!inserted)
        throw ModelError("duplicate specification transition key (" + from +
                         ", " + input.to_string() + ")");
}

std::optional<SpecTransducer::Value> SpecTransducer::step(
    const Name& state, const InputEvent& input) const {
    auto it = transitions.find(Key{state, input});
    if (it == transitions.end())
        return std::nullopt;
    return it->second;
}

std::set<InputEvent> SpecTransducer::input_events() const {
    std::set<InputEvent> out;
    for (const auto& [key, value] : transitions)
        out.insert(key.second);
    return out;
}

bool SpecTransducer::is_input_complete(const std::set<InputEvent>& inputs) const {
    for (const auto& q : states)
        for (const auto& x : inputs)
            if (!step(q, x))
                return false;
    return true;
}

bool SpecTransducer::has_marked_word() const {
    std::set<Name> seen{initial};
    std::deque<Name> frontier{initial};
    while (!frontier.empty()) {
        Name q = frontier.front();
        frontier.pop_front();
        if (is_marked(q))
            return true;
        for (const auto& [key, value] : transitions)
            if (key.first == q && seen.insert(value.second).second)
                frontier.push_back(value.second);
    }
    return false;
}

SafetyAutomaton::SafetyAutomaton(SpecTransducer spec) : spec_(std::move(spec)) {
    names_.assign(spec_.states.begin(), spec_.states.end());
    for (State i = 0; i < static_cast<State>(names_.size()); ++i)
        index_[names_[i]] = i;
    auto it = index_.find(spec_.initial);
    if (it == index_.end())
        throw ModelError("specification initial state is not a declared state");
    initial_ = it->second;
}

bool SafetyAutomaton::is_marked(State s) const {
    if (is_bottom(s))
        return false;
    return spec_.is_marked(names_[s]);
}

SafetyAutomaton::State SafetyAutomaton::step(State s, const InputEvent& input,
                                             const OutputEvent& output) const {
    if (is_bottom(s))
        return bottom();
    auto next = spec_.step(names_[s], input);
    if (!next || !(next->first == output))
        return bottom();
    return index_.at(next->second);
}

SafetyAutomaton::State SafetyAutomaton::run(const IoWord& w) const {
    State s = initial_;
    for (const auto& step_pair : w)
        s = step(s, step_pair.input, step_pair.output);
    return s;
}

const Name& SafetyAutomaton::name_of(State s) const {
    static const Name kBottom = "_bottom";
    if (is_bottom(s))
        return kBottom;
    return names_[s];
}

std::vector<bool> SafetyAutomaton::coaccessible() const {
    const size_t n = names_.size();
    std::vector<bool> reach(n, false);
    for (size_t i = 0; i < n; ++i)
        reach[i] = spec_.is_marked(names_[i]);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [key, value] : spec_.transitions) {
            State from = index_.at(key.first);
            State to = index_.at(value.second);
            if (!reach[from] && reach[to]) {
                reach[from] = true;
                changed = true;
            }
        }
    }
    return reach;
}

SafetyAutomaton complete_to_safety_automaton(const SpecTransducer& spec) {
    return SafetyAutomaton(spec);
}

} // namespace rdes
