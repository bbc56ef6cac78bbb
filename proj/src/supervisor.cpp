#include "rdes/supervisor.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rdes/errors.hpp"
#include "rdes/model_io.hpp"

namespace rdes {

int SupervisorMachine::index_of(const Name& memory_state) const {
    for (size_t i = 0; i < memory.size(); ++i)
        if (memory[i] == memory_state)
            return static_cast<int>(i);
    throw ModelError("unknown supervisor memory state: " + memory_state);
}

const ControlPattern& SupervisorMachine::pattern(int memory_idx,
                                                 const InputEvent& input) const {
    auto it = pattern_of.find({memory_idx, input});
    if (it == pattern_of.end())
        throw ModelError("supervisor has no pattern for memory state " +
                         memory[memory_idx] + " under input " +
                         input.to_string());
    return it->second;
}

std::optional<int> SupervisorMachine::next(int memory_idx,
                                           const InputEvent& input,
                                           const InternalEvent& event) const {
    auto it = update.find({memory_idx, input, event});
    if (it == update.end())
        return std::nullopt;
    return it->second;
}

SupervisorMachine realize_supervisor(const GameArena& arena,
                                     const std::map<int, int>& strategy) {
    SupervisorMachine sup;
    sup.plant_fingerprint = fingerprint(arena.plant);

    std::map<int, int> memory_of_env; // env node -> memory index
    auto intern = [&](int env) {
        auto it = memory_of_env.find(env);
        if (it != memory_of_env.end())
            return std::pair<int, bool>{it->second, false};
        int idx = static_cast<int>(sup.memory.size());
        memory_of_env.emplace(env, idx);
        sup.memory.push_back("m" + std::to_string(idx));
        sup.plant_component.push_back(arena.env_nodes[env].plant_state);
        sup.spec_marked.push_back(
            arena.acceptor.is_marked(arena.env_nodes[env].spec_state));
        return std::pair<int, bool>{idx, true};
    };

    std::deque<int> frontier;
    sup.initial = intern(arena.initial_env).first;
    frontier.push_back(arena.initial_env);

    while (!frontier.empty()) {
        int env = frontier.front();
        frontier.pop_front();
        int m = memory_of_env.at(env);

        for (const auto& [input, sup_node] : arena.env_edges[env]) {
            auto it = strategy.find(sup_node);
            if (it == strategy.end())
                throw ModelError(
                    "internal consistency error: strategy undefined at a "
                    "reachable supervisor node");
            int pattern_idx = it->second;
            sup.pattern_of.emplace(std::pair<int, InputEvent>{m, input},
                                   arena.patterns[pattern_idx]);

            int plant_node = -1;
            for (const auto& [pat, pnode] : arena.sup_edges[sup_node])
                if (pat == pattern_idx) {
                    plant_node = pnode;
                    break;
                }
            for (const auto& edge : arena.plant_edges[plant_node]) {
                auto [succ, fresh] = intern(edge.env);
                sup.update.emplace(
                    std::tuple<int, InputEvent, InternalEvent>{m, input,
                                                               edge.event},
                    succ);
                if (fresh)
                    frontier.push_back(edge.env);
            }
        }
    }
    return sup;
}

SupervisorMachine permissive_supervisor(const OpenDes& plant) {
    SupervisorMachine sup;
    sup.plant_fingerprint = fingerprint(plant);
    sup.memory.push_back("m0");
    sup.plant_component.push_back("");
    sup.spec_marked.push_back(true);
    sup.initial = 0;

    std::vector<Name> all;
    all.insert(all.end(), plant.controllable.begin(), plant.controllable.end());
    all.insert(all.end(), plant.uncontrollable.begin(),
               plant.uncontrollable.end());
    ControlPattern everything(all);
    for (const auto& x : plant.input_events)
        sup.pattern_of.emplace(std::pair<int, InputEvent>{0, x}, everything);
    for (const auto& [key, value] : plant.transitions)
        sup.update.emplace(
            std::tuple<int, InputEvent, InternalEvent>{0, std::get<1>(key),
                                                       std::get<2>(key)},
            0);
    return sup;
}

ClosedLoop compose(const OpenDes& plant, const SupervisorMachine& sup) {
    if (!sup.plant_fingerprint.empty() &&
        sup.plant_fingerprint != fingerprint(plant))
        throw ModelError(
            "supervisor/plant mismatch: the supervisor was built for a "
            "different plant (fingerprints differ)");

    ClosedLoop cl;
    cl.graph.input_alphabet = plant.input_alphabet;
    cl.graph.output_alphabet = plant.output_alphabet;
    cl.graph.input_events = plant.input_events;
    cl.graph.controllable = plant.controllable;
    cl.graph.uncontrollable = plant.uncontrollable;

    auto state_name = [&](const Name& q, int m) {
        return q + "@" + sup.memory[m];
    };

    std::set<std::pair<Name, int>> seen;
    std::deque<std::pair<Name, int>> frontier;
    std::pair<Name, int> init{plant.initial, sup.initial};
    seen.insert(init);
    frontier.push_back(init);
    cl.graph.initial = state_name(plant.initial, sup.initial);

    while (!frontier.empty()) {
        auto [q, m] = frontier.front();
        frontier.pop_front();
        Name name = state_name(q, m);
        cl.graph.states.insert(name);
        cl.origin[name] = {q, m};
        if (plant.is_marked(q)) {
            cl.plant_marked.insert(name);
            if (sup.spec_marked[m])
                cl.product_marked.insert(name);
        }

        for (const auto& x : plant.input_events) {
            const ControlPattern& theta = sup.pattern(m, x);
            cl.patterns.emplace(std::pair<Name, InputEvent>{name, x}, theta);
            for (const auto& move : plant.enabled_moves(q, x)) {
                if (!theta.allows(move.event))
                    continue;
                auto next = sup.next(m, x, move.event);
                if (!next)
                    throw ModelError(
                        "internal consistency error: supervisor update "
                        "undefined for an enabled event");
                std::pair<Name, int> succ{move.target, *next};
                cl.graph.add_transition(name, x, move.event, move.output,
                                        state_name(succ.first, succ.second));
                if (seen.insert(succ).second)
                    frontier.push_back(succ);
            }
        }
    }

    cl.graph.marked = cl.product_marked;
    return cl;
}

NonblockingVerdict check_nonblocking(const ClosedLoop& cl, Marking marking) {
    const std::set<Name>& target =
        marking == Marking::Product ? cl.product_marked : cl.plant_marked;

    // coaccessibility to the selected marked set
    std::set<Name> coaccessible = target;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [key, value] : cl.graph.transitions) {
            const Name& from = std::get<0>(key);
            if (coaccessible.count(from) == 0 &&
                coaccessible.count(value.second) > 0) {
                coaccessible.insert(from);
                changed = true;
            }
        }
    }

    NonblockingVerdict verdict;
    if (coaccessible.count(cl.graph.initial) == 0 && target.empty()) {
        verdict.nonblocking = false;
        verdict.witness = XpWord{};
        return verdict;
    }

    // shortest path into a non-coaccessible state, if any
    std::map<Name, XpWord> access;
    std::deque<Name> frontier;
    access.emplace(cl.graph.initial, XpWord{});
    frontier.push_back(cl.graph.initial);
    if (coaccessible.count(cl.graph.initial) == 0) {
        verdict.nonblocking = false;
        verdict.witness = XpWord{};
        return verdict;
    }
    while (!frontier.empty()) {
        Name q = frontier.front();
        frontier.pop_front();
        auto lo = cl.graph.transitions.lower_bound(
            OpenDes::TransKey{q, InputEvent{}, InternalEvent{}});
        for (auto it = lo; it != cl.graph.transitions.end(); ++it) {
            if (std::get<0>(it->first) != q)
                break;
            const Name& next = it->second.second;
            if (access.count(next) > 0)
                continue;
            XpWord w = access.at(q);
            w.push_back({std::get<1>(it->first), std::get<2>(it->first)});
            if (coaccessible.count(next) == 0) {
                verdict.nonblocking = false;
                verdict.witness = std::move(w);
                return verdict;
            }
            access.emplace(next, std::move(w));
            frontier.push_back(next);
        }
    }
    return verdict;
}

namespace {

/// Deterministic view of the closed loop over input/output pairs via subset
/// construction, paired with the acceptor's own deterministic structure.
struct PairDfaSearch {
    const ClosedLoop& cl;
    const SafetyAutomaton& ak;
    std::vector<bool> ak_coaccessible;
    std::set<std::pair<InputEvent, OutputEvent>> alphabet;

    PairDfaSearch(const ClosedLoop& cl_in, const SafetyAutomaton& ak_in)
        : cl(cl_in), ak(ak_in) {
        for (const auto& [key, value] : cl.graph.transitions)
            alphabet.insert({std::get<1>(key), value.first});
        for (const auto& [key, value] : ak.spec().transitions)
            alphabet.insert({key.second, value.first});
        ak_coaccessible = ak.coaccessible();
    }

    std::set<Name> step_loop(const std::set<Name>& states, const InputEvent& x,
                             const OutputEvent& y) const {
        std::set<Name> out;
        for (const auto& q : states) {
            auto lo = cl.graph.transitions.lower_bound(
                OpenDes::TransKey{q, x, InternalEvent{}});
            for (auto it = lo; it != cl.graph.transitions.end(); ++it) {
                const auto& [from, input, event] = it->first;
                if (from != q || !(input == x))
                    break;
                if (it->second.first == y)
                    out.insert(it->second.second);
            }
        }
        return out;
    }

    /// Compares the loop language under `loop_accepts` against the acceptor
    /// language under `spec_accepts`; returns a shortest distinguishing
    /// word, searching pairs in ascending canonical order.
    template <typename LoopAccepts, typename SpecAccepts>
    EqualityVerdict compare(LoopAccepts loop_accepts,
                            SpecAccepts spec_accepts) const {
        struct State {
            std::set<Name> loop_states;
            SafetyAutomaton::State spec_state;
            IoWord word;
        };
        std::set<std::pair<std::set<Name>, SafetyAutomaton::State>> seen;
        std::deque<State> frontier;
        State init{{cl.graph.initial}, ak.initial(), {}};
        seen.insert({init.loop_states, init.spec_state});
        frontier.push_back(std::move(init));

        while (!frontier.empty()) {
            State cur = frontier.front();
            frontier.pop_front();

            bool left = !cur.loop_states.empty() && loop_accepts(cur.loop_states);
            bool right = spec_accepts(cur.spec_state);
            if (left != right)
                return {false, cur.word};

            for (const auto& [x, y] : alphabet) {
                State next{step_loop(cur.loop_states, x, y),
                           ak.step(cur.spec_state, x, y),
                           cur.word};
                if (next.loop_states.empty() && ak.is_bottom(next.spec_state))
                    continue;
                if (!seen.insert({next.loop_states, next.spec_state}).second)
                    continue;
                next.word.push_back({x, y});
                frontier.push_back(std::move(next));
            }
        }
        return {true, std::nullopt};
    }
};

/// Depth-bounded language comparison used to cross-check the exact
/// verdicts: enumerates both sides directly, tracking run endpoints.
bool bounded_equality_agrees(const ClosedLoop& cl, const SafetyAutomaton& ak,
                             int depth, const std::set<Name>& loop_accepting,
                             bool spec_closure, bool loop_all_states,
                             bool exact_holds) {
    std::set<IoWord> loop_side;
    struct Item {
        IoWord word;
        Name state;
    };
    std::deque<Item> frontier{{{}, cl.graph.initial}};
    for (int len = 0; len <= depth; ++len) {
        std::deque<Item> next;
        for (const auto& item : frontier) {
            if (loop_all_states || loop_accepting.count(item.state) > 0)
                loop_side.insert(item.word);
            if (len == depth)
                continue;
            for (const auto& x : cl.graph.input_events) {
                auto lo = cl.graph.transitions.lower_bound(
                    OpenDes::TransKey{item.state, x, InternalEvent{}});
                for (auto it = lo; it != cl.graph.transitions.end(); ++it) {
                    const auto& [from, input, event] = it->first;
                    if (from != item.state || !(input == x))
                        break;
                    IoWord w = item.word;
                    w.push_back({x, it->second.first});
                    next.push_back({std::move(w), it->second.second});
                }
            }
        }
        frontier = std::move(next);
    }

    std::set<IoWord> spec_side;
    std::vector<bool> coaccessible = ak.coaccessible();
    std::set<std::pair<InputEvent, OutputEvent>> alphabet;
    for (const auto& [key, value] : ak.spec().transitions)
        alphabet.insert({key.second, value.first});
    struct SpecItem {
        IoWord word;
        SafetyAutomaton::State state;
    };
    std::deque<SpecItem> spec_frontier{{{}, ak.initial()}};
    for (int len = 0; len <= depth; ++len) {
        std::deque<SpecItem> next;
        for (const auto& item : spec_frontier) {
            bool accept = spec_closure
                              ? (!ak.is_bottom(item.state) &&
                                 coaccessible[item.state])
                              : ak.is_marked(item.state);
            if (accept)
                spec_side.insert(item.word);
            if (len == depth)
                continue;
            for (const auto& [x, y] : alphabet) {
                SafetyAutomaton::State s = ak.step(item.state, x, y);
                if (ak.is_bottom(s))
                    continue;
                IoWord w = item.word;
                w.push_back({x, y});
                next.push_back({std::move(w), s});
            }
        }
        spec_frontier = std::move(next);
    }

    bool bounded_equal = loop_side == spec_side;
    // The exact check may only fail beyond the horizon; a bounded
    // disagreement with an exact "holds" is a genuine inconsistency.
    if (exact_holds)
        return bounded_equal;
    return true;
}

} // namespace

VerificationReport verify_specification(const ClosedLoop& cl,
                                        const SpecTransducer& spec, int depth) {
    VerificationReport report;
    report.cross_check_depth = depth;

    SafetyAutomaton ak(spec);
    PairDfaSearch search(cl, ak);
    std::vector<bool> coaccessible = ak.coaccessible();

    report.safe_equality = search.compare(
        [](const std::set<Name>&) { return true; },
        [&](SafetyAutomaton::State s) {
            return !ak.is_bottom(s) && coaccessible[s];
        });
    report.marked_product_equality = search.compare(
        [&](const std::set<Name>& states) {
            for (const auto& q : states)
                if (cl.product_marked.count(q) > 0)
                    return true;
            return false;
        },
        [&](SafetyAutomaton::State s) { return ak.is_marked(s); });
    report.marked_plant_equality = search.compare(
        [&](const std::set<Name>& states) {
            for (const auto& q : states)
                if (cl.plant_marked.count(q) > 0)
                    return true;
            return false;
        },
        [&](SafetyAutomaton::State s) { return ak.is_marked(s); });

    report.nonblocking = check_nonblocking(cl, Marking::Product);
    report.marking_divergence = report.marked_plant_equality.holds !=
                                report.marked_product_equality.holds;

    report.bounded_cross_check_ok =
        bounded_equality_agrees(cl, ak, depth, {}, true, true,
                                report.safe_equality.holds) &&
        bounded_equality_agrees(cl, ak, depth, cl.product_marked, false, false,
                                report.marked_product_equality.holds) &&
        bounded_equality_agrees(cl, ak, depth, cl.plant_marked, false, false,
                                report.marked_plant_equality.holds);

    return report;
}

SynthesisResult synthesize(const OpenDes& plant, const SpecTransducer& spec,
                           const SynthesisOptions& options) {
    ValidationReport validation = validate_plant(plant);
    if (!validation.partition_violations.empty() ||
        !validation.unreachable.empty())
        throw ModelError("plant failed validation");
    if (!spec.has_marked_word())
        throw ModelError("empty specification: no marked state is reachable");

    OpenDes completed = complete_inputs(plant);
    if (!spec.is_input_complete(completed.input_events))
        throw ModelError(
            "specification is not input-complete over the plant's declared "
            "input events");

    SynthesisResult result;
    result.controllability_literal = check_output_controllability(
        completed, spec, ControllabilityMode::Literal);
    result.controllability_local =
        check_output_controllability(completed, spec, ControllabilityMode::Local);
    result.closedness = check_closedness(completed, spec);

    SafetyAutomaton ak(spec);
    GameArena arena = build_arena(completed, ak, options.node_cap);
    GameSolution solution = solve(arena);

    result.arena_stats.env_nodes = arena.env_nodes.size();
    result.arena_stats.sup_nodes = arena.sup_nodes.size();
    result.arena_stats.plant_nodes = arena.plant_nodes.size();
    result.arena_stats.edges = arena.edge_count();
    result.arena_stats.losing =
        std::count(arena.losing.begin(), arena.losing.end(), true);
    result.arena_stats.marked =
        std::count(arena.marked.begin(), arena.marked.end(), true);
    result.arena_stats.winning = std::count(solution.winning_env.begin(),
                                            solution.winning_env.end(), true);
    result.arena_stats.realizable = solution.realizable;
    result.realizable = solution.realizable;

    if (solution.realizable) {
        auto strategy = extract_strategy(arena, solution);
        result.supervisor = realize_supervisor(arena, strategy);
        result.closed_loop = compose(completed, *result.supervisor);
        result.verification = verify_specification(*result.closed_loop, spec,
                                                   options.verify_depth);
    }
    return result;
}

std::string TraceStep::to_string() const {
    std::ostringstream out;
    out << "in=" << input.to_string() << " pattern=" << pattern.to_string()
        << " fired=" << fired.to_string() << " out=" << output.to_string()
        << " state=" << state;
    return out.str();
}

Trace simulate(const ClosedLoop& cl, const EnvPolicy& policy, int steps,
               std::uint64_t seed) {
    std::vector<InputEvent> inputs(cl.graph.input_events.begin(),
                                   cl.graph.input_events.end());
    if (policy.kind == EnvPolicy::Kind::Script)
        for (const auto& x : policy.script)
            if (cl.graph.input_events.count(x) == 0)
                throw ModelError("script references undeclared input event " +
                                 x.to_string());

    // Cooperative distance to a marked state, for the adversarial policy.
    std::map<Name, int> distance;
    if (policy.kind == EnvPolicy::Kind::Adversarial) {
        const std::set<Name>& target =
            cl.product_marked.empty() ? cl.plant_marked : cl.product_marked;
        std::deque<Name> frontier;
        for (const auto& q : target) {
            distance[q] = 0;
            frontier.push_back(q);
        }
        while (!frontier.empty()) {
            Name q = frontier.front();
            frontier.pop_front();
            for (const auto& [key, value] : cl.graph.transitions) {
                if (value.second != q)
                    continue;
                const Name& from = std::get<0>(key);
                if (distance.count(from) == 0) {
                    distance[from] = distance[q] + 1;
                    frontier.push_back(from);
                }
            }
        }
    }
    constexpr int kUnreachable = 1 << 20;
    auto dist = [&](const Name& q) {
        auto it = distance.find(q);
        return it == distance.end() ? kUnreachable : it->second;
    };

    // A fully specified generator; chosen by modulo so that traces are
    // reproducible across platforms.
    std::mt19937_64 rng(seed);
    auto pick = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };

    Trace trace;
    if (inputs.empty())
        return trace;
    Name state = cl.graph.initial;
    for (int step = 0; step < steps; ++step) {
        InputEvent input;
        switch (policy.kind) {
        case EnvPolicy::Kind::Random:
            input = inputs[pick(inputs.size())];
            break;
        case EnvPolicy::Kind::Script:
            if (static_cast<size_t>(step) >= policy.script.size())
                return trace;
            input = policy.script[step];
            break;
        case EnvPolicy::Kind::Adversarial: {
            // spoil: maximize the distance of the worst reachable successor
            int best_score = -1;
            for (const auto& x : inputs) {
                int worst = kUnreachable + 1;
                for (const auto& move : cl.graph.enabled_moves(state, x))
                    worst = std::min(worst, dist(move.target));
                if (worst > best_score) {
                    best_score = worst;
                    input = x;
                }
            }
            break;
        }
        }

        auto moves = cl.graph.enabled_moves(state, input);
        if (moves.empty())
            break; // cannot happen on a supervised loop; guard anyway
        const PlantMove& move = moves[pick(moves.size())];
        const ControlPattern& pattern = cl.patterns.at({state, input});
        state = move.target;
        trace.push_back({input, pattern, move.event, move.output, state});
    }
    return trace;
}

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json event_set_json(const EventSet& e) {
    if (e.is_silent())
        return ordered_json("eps");
    return ordered_json(e.names());
}

EventSet event_set_from_json(const json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "eps")
            return EventSet::silent();
        throw ParseError("bad event set \"" + v.get<std::string>() + "\"");
    }
    if (!v.is_array())
        throw ParseError("event set must be \"eps\" or an array");
    std::vector<Name> names;
    for (const auto& item : v)
        names.push_back(item.get<std::string>());
    return EventSet(std::move(names));
}

} // namespace

std::string print_supervisor(const SupervisorMachine& sup) {
    ordered_json doc;
    doc["kind"] = "supervisor";
    std::vector<Name> states = sup.memory;
    std::sort(states.begin(), states.end());
    doc["states"] = states;
    doc["initial"] = sup.memory[sup.initial];
    std::vector<Name> marked;
    for (size_t i = 0; i < sup.memory.size(); ++i)
        if (sup.spec_marked[i])
            marked.push_back(sup.memory[i]);
    std::sort(marked.begin(), marked.end());
    doc["marked"] = marked;
    doc["fingerprint"] = sup.plant_fingerprint;

    ordered_json patterns = ordered_json::array();
    std::map<std::pair<Name, InputEvent>, const ControlPattern*> by_name;
    for (const auto& [key, value] : sup.pattern_of)
        by_name[{sup.memory[key.first], key.second}] = &value;
    for (const auto& [key, value] : by_name) {
        ordered_json entry;
        entry["state"] = key.first;
        entry["input"] = event_set_json(key.second);
        entry["enable"] = value->enabled();
        patterns.push_back(std::move(entry));
    }
    doc["pattern"] = std::move(patterns);

    ordered_json updates = ordered_json::array();
    std::map<std::tuple<Name, InputEvent, InternalEvent>, Name> update_by_name;
    for (const auto& [key, value] : sup.update)
        update_by_name[{sup.memory[std::get<0>(key)], std::get<1>(key),
                        std::get<2>(key)}] = sup.memory[value];
    for (const auto& [key, value] : update_by_name) {
        ordered_json entry;
        entry["state"] = std::get<0>(key);
        entry["input"] = event_set_json(std::get<1>(key));
        entry["event"] = std::get<2>(key).is_stutter() ? "eps"
                                                       : std::get<2>(key).name();
        entry["to"] = value;
        updates.push_back(std::move(entry));
    }
    doc["update"] = std::move(updates);
    return doc.dump(2) + "\n";
}

SupervisorMachine parse_supervisor(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object() || doc.value("kind", "") != "supervisor")
        throw ParseError("expected a supervisor document");

    SupervisorMachine sup;
    std::map<Name, int> index;
    for (const auto& item : doc.at("states")) {
        Name n = item.get<std::string>();
        index[n] = static_cast<int>(sup.memory.size());
        sup.memory.push_back(n);
        sup.plant_component.push_back("");
        sup.spec_marked.push_back(false);
    }
    if (sup.memory.empty())
        throw ParseError("empty supervisor state set");
    Name initial = doc.at("initial").get<std::string>();
    if (index.count(initial) == 0)
        throw ParseError("undeclared initial state \"" + initial + "\"");
    sup.initial = index.at(initial);
    for (const auto& item : doc.at("marked")) {
        Name n = item.get<std::string>();
        if (index.count(n) == 0)
            throw ParseError("undeclared marked state \"" + n + "\"");
        sup.spec_marked[index.at(n)] = true;
    }
    sup.plant_fingerprint = doc.value("fingerprint", "");

    for (const auto& entry : doc.at("pattern")) {
        Name state = entry.at("state").get<std::string>();
        if (index.count(state) == 0)
            throw ParseError("pattern entry references undeclared state \"" +
                             state + "\"");
        InputEvent input = event_set_from_json(entry.at("input"));
        std::vector<Name> enable;
        for (const auto& e : entry.at("enable"))
            enable.push_back(e.get<std::string>());
        sup.pattern_of.emplace(
            std::pair<int, InputEvent>{index.at(state), input},
            ControlPattern(std::move(enable)));
    }
    for (const auto& entry : doc.at("update")) {
        Name state = entry.at("state").get<std::string>();
        Name to = entry.at("to").get<std::string>();
        if (index.count(state) == 0 || index.count(to) == 0)
            throw ParseError("update entry references an undeclared state");
        InputEvent input = event_set_from_json(entry.at("input"));
        std::string event_name = entry.at("event").get<std::string>();
        InternalEvent event = event_name == "eps" ? InternalEvent::stutter()
                                                  : InternalEvent(event_name);
        sup.update.emplace(
            std::tuple<int, InputEvent, InternalEvent>{index.at(state), input,
                                                       event},
            index.at(to));
    }
    return sup;
}

} // namespace rdes
