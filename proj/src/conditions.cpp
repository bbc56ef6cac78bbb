#include "rdes/conditions.hpp"

#include <deque>
#include <map>

#include "rdes/errors.hpp"

namespace rdes {

std::string CheckVerdict::witness_string() const {
    if (io_witness)
        return to_string(*io_witness);
    if (output_witness)
        return to_string(*output_witness);
    return "";
}

UncontrollableIoSet uncontrollable_io(const OpenDes& plant) {
    UncontrollableIoSet pairs;
    for (const auto& [key, value] : plant.transitions) {
        const InternalEvent& event = std::get<2>(key);
        if (plant.is_uncontrollable(event))
            pairs.insert({std::get<1>(key), value.first});
    }
    return pairs;
}

CheckVerdict check_output_controllability(const OpenDes& plant,
                                          const SpecTransducer& spec,
                                          ControllabilityMode mode) {
    if (!spec.is_input_complete(plant.input_events))
        throw ModelError(
            "specification is not input-complete over the plant's declared "
            "input events");

    CheckVerdict verdict;
    verdict.mode = mode;

    const UncontrollableIoSet unc = uncontrollable_io(plant);
    SafetyAutomaton ak(spec);
    // Membership in the specification's prefix closure needs the run to stay
    // out of the sink and to end somewhere a marked state is still reachable.
    std::vector<bool> coaccessible = ak.coaccessible();
    auto in_closure = [&](SafetyAutomaton::State s) {
        return !ak.is_bottom(s) && coaccessible[s];
    };

    // Breadth-first over the product of the plant with the acceptor,
    // restricted to in-closure states. Expansion follows the canonical
    // transition order, so a failing check reports the canonically first
    // shortest witness.
    using Product = std::pair<Name, SafetyAutomaton::State>;
    std::map<Product, IoWord> access;
    std::deque<Product> frontier;
    Product init{plant.initial, ak.initial()};
    if (!in_closure(ak.initial()))
        return verdict; // empty closure: nothing to extend, vacuously holds
    access.emplace(init, IoWord{});
    frontier.push_back(init);

    while (!frontier.empty()) {
        Product cur = frontier.front();
        frontier.pop_front();
        const IoWord& word = access.at(cur);

        auto lo = plant.transitions.lower_bound(
            OpenDes::TransKey{cur.first, InputEvent{}, InternalEvent{}});
        for (auto it = lo; it != plant.transitions.end(); ++it) {
            const auto& [from, input, event] = it->first;
            if (from != cur.first)
                break;
            const OutputEvent& output = it->second.first;
            SafetyAutomaton::State next = ak.step(cur.second, input, output);
            if (!in_closure(next)) {
                bool premise =
                    mode == ControllabilityMode::Literal
                        ? unc.count({input, output}) > 0
                        : plant.is_uncontrollable(event);
                if (premise) {
                    verdict.holds = false;
                    IoWord witness = word;
                    witness.push_back({input, output});
                    verdict.io_witness = std::move(witness);
                    return verdict;
                }
                continue;
            }
            Product succ{it->second.second, next};
            if (access.count(succ) == 0) {
                IoWord w = word;
                w.push_back({input, output});
                access.emplace(succ, std::move(w));
                frontier.push_back(succ);
            }
        }
    }

    return verdict;
}

namespace {

/// Nondeterministic automaton over non-silent output events. Silent outputs
/// become epsilon moves.
struct OutputNfa {
    int states = 0;
    std::set<int> initial;
    std::vector<bool> accepting;
    // labeled edges and epsilon edges
    std::map<std::pair<int, OutputEvent>, std::set<int>> edges;
    std::vector<std::set<int>> eps;

    std::set<int> eps_closure(std::set<int> s) const {
        std::deque<int> frontier(s.begin(), s.end());
        while (!frontier.empty()) {
            int q = frontier.front();
            frontier.pop_front();
            for (int t : eps[q])
                if (s.insert(t).second)
                    frontier.push_back(t);
        }
        return s;
    }

    std::set<int> step(const std::set<int>& s, const OutputEvent& y) const {
        std::set<int> out;
        for (int q : s) {
            auto it = edges.find({q, y});
            if (it != edges.end())
                out.insert(it->second.begin(), it->second.end());
        }
        return eps_closure(std::move(out));
    }

    bool accepts(const std::set<int>& s) const {
        for (int q : s)
            if (accepting[q])
                return true;
        return false;
    }
};

} // namespace

CheckVerdict check_closedness(const OpenDes& plant, const SpecTransducer& spec) {
    CheckVerdict verdict;

    SafetyAutomaton ak(spec);
    const auto& spec_names = ak.names();
    std::map<Name, int> spec_index;
    for (size_t i = 0; i < spec_names.size(); ++i)
        spec_index[spec_names[i]] = static_cast<int>(i);

    // Specification side: output projection of the marked language. The same
    // subset state answers both the language itself (marked endpoint) and its
    // prefix closure (endpoint co-accessible to marked).
    OutputNfa spec_nfa;
    spec_nfa.states = static_cast<int>(spec_names.size());
    spec_nfa.eps.resize(spec_nfa.states);
    spec_nfa.accepting.resize(spec_nfa.states, false);
    for (int i = 0; i < spec_nfa.states; ++i)
        spec_nfa.accepting[i] = spec.is_marked(spec_names[i]);
    for (const auto& [key, value] : spec.transitions) {
        int from = spec_index.at(key.first);
        int to = spec_index.at(value.second);
        if (value.first.is_silent())
            spec_nfa.eps[from].insert(to);
        else
            spec_nfa.edges[{from, value.first}].insert(to);
    }
    spec_nfa.initial = spec_nfa.eps_closure({spec_index.at(spec.initial)});
    std::vector<bool> spec_coaccessible = ak.coaccessible();

    // Plant side: output projection of the marked input/output language.
    std::map<Name, int> plant_index;
    std::vector<Name> plant_names(plant.states.begin(), plant.states.end());
    for (size_t i = 0; i < plant_names.size(); ++i)
        plant_index[plant_names[i]] = static_cast<int>(i);
    OutputNfa plant_nfa;
    plant_nfa.states = static_cast<int>(plant_names.size());
    plant_nfa.eps.resize(plant_nfa.states);
    plant_nfa.accepting.resize(plant_nfa.states, false);
    for (int i = 0; i < plant_nfa.states; ++i)
        plant_nfa.accepting[i] = plant.is_marked(plant_names[i]);
    for (const auto& [key, value] : plant.transitions) {
        int from = plant_index.at(std::get<0>(key));
        int to = plant_index.at(value.second);
        if (value.first.is_silent())
            plant_nfa.eps[from].insert(to);
        else
            plant_nfa.edges[{from, value.first}].insert(to);
    }
    plant_nfa.initial = plant_nfa.eps_closure({plant_index.at(plant.initial)});

    // Alphabet of non-silent output events seen on either side.
    std::set<OutputEvent> alphabet;
    for (const auto& [key, targets] : spec_nfa.edges)
        alphabet.insert(key.second);
    for (const auto& [key, targets] : plant_nfa.edges)
        alphabet.insert(key.second);

    auto accepts_closure = [&](const std::set<int>& s) {
        for (int q : s)
            if (spec_coaccessible[q])
                return true;
        return false;
    };

    // Left side is the projected specification language; right side is its
    // closure intersected with the projected marked plant language. Search
    // the symmetric difference breadth-first. Symbols are expanded in
    // descending canonical order, so the reported witness is the canonically
    // last among the shortest ones.
    std::vector<OutputEvent> symbols(alphabet.rbegin(), alphabet.rend());

    struct SearchState {
        std::set<int> spec_set;
        std::set<int> plant_set;
        std::vector<OutputEvent> word;
    };
    std::set<std::pair<std::set<int>, std::set<int>>> seen;
    std::deque<SearchState> frontier;
    frontier.push_back({spec_nfa.initial, plant_nfa.initial, {}});
    seen.insert({spec_nfa.initial, plant_nfa.initial});

    while (!frontier.empty()) {
        SearchState cur = frontier.front();
        frontier.pop_front();

        bool left = spec_nfa.accepts(cur.spec_set);
        bool right =
            accepts_closure(cur.spec_set) && plant_nfa.accepts(cur.plant_set);
        if (left != right) {
            verdict.holds = false;
            verdict.output_witness = cur.word;
            return verdict;
        }

        for (const auto& y : symbols) {
            SearchState next{spec_nfa.step(cur.spec_set, y),
                             plant_nfa.step(cur.plant_set, y), cur.word};
            if (next.spec_set.empty() && next.plant_set.empty())
                continue;
            if (!seen.insert({next.spec_set, next.plant_set}).second)
                continue;
            next.word.push_back(y);
            frontier.push_back(std::move(next));
        }
    }

    return verdict;
}

} // namespace rdes
