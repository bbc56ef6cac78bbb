#include "rdes/model_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rdes/errors.hpp"

namespace rdes {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError(std::string("missing required key \"") + key + "\"");
    return *it;
}

std::string require_string(const json& doc, const char* key) {
    const json& v = require(doc, key);
    if (!v.is_string())
        throw ParseError(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

void check_identifier(const std::string& name, const char* what) {
    if (name.empty())
        throw ParseError(std::string("empty ") + what + " identifier");
    if (name == "eps")
        throw ParseError(std::string(what) + " may not be named \"eps\"");
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ParseError(std::string("whitespace in ") + what +
                             " identifier \"" + name + "\"");
}

std::vector<Name> parse_name_array(const json& v, const char* what) {
    if (!v.is_array())
        throw ParseError(std::string(what) + " must be an array of strings");
    std::vector<Name> names;
    for (const auto& item : v) {
        if (!item.is_string())
            throw ParseError(std::string(what) + " must contain only strings");
        Name n = item.get<std::string>();
        check_identifier(n, what);
        names.push_back(std::move(n));
    }
    return names;
}

/// An event set is serialized as "eps" or an array of symbol names. The
/// empty array is identified with the silent event.
EventSet parse_event_set(const json& v, const std::set<Name>* alphabet,
                         const char* what) {
    if (v.is_string()) {
        if (v.get<std::string>() == "eps")
            return EventSet::silent();
        throw ParseError(std::string("bad ") + what + " \"" +
                         v.get<std::string>() + "\" (expected \"eps\" or an array)");
    }
    std::vector<Name> names = parse_name_array(v, what);
    if (alphabet)
        for (const auto& n : names)
            if (alphabet->count(n) == 0)
                throw ParseError(std::string("undeclared ") + what +
                                 " symbol \"" + n + "\"");
    return EventSet(std::move(names));
}

InternalEvent parse_internal(const json& v, const OpenDes& plant) {
    if (!v.is_string())
        throw ParseError("transition \"event\" must be a string");
    std::string name = v.get<std::string>();
    if (name == "eps")
        return InternalEvent::stutter();
    if (plant.controllable.count(name) == 0 &&
        plant.uncontrollable.count(name) == 0)
        throw ParseError("undeclared internal event \"" + name + "\"");
    return InternalEvent(name);
}

void check_disjoint_name_spaces(const OpenDes& plant) {
    std::map<Name, std::string> owner;
    auto claim = [&owner](const Name& n, const std::string& space) {
        auto [it, inserted] = owner.emplace(n, space);
        if (!inserted && it->second != space)
            throw ParseError("name \"" + n + "\" declared in both " +
                             it->second + " and " + space);
    };
    for (const auto& n : plant.input_alphabet) claim(n, "input_alphabet");
    for (const auto& n : plant.output_alphabet) claim(n, "output_alphabet");
    for (const auto& n : plant.controllable) claim(n, "internal events");
    for (const auto& n : plant.uncontrollable) claim(n, "internal events");
    for (const auto& n : plant.states) claim(n, "states");
}

OpenDes parse_plant_doc(const json& doc) {
    OpenDes plant;

    for (auto& n : parse_name_array(require(doc, "input_alphabet"), "input_alphabet"))
        plant.input_alphabet.insert(std::move(n));
    for (auto& n : parse_name_array(require(doc, "output_alphabet"), "output_alphabet"))
        plant.output_alphabet.insert(std::move(n));

    const json& events = require(doc, "input_events");
    if (!events.is_array())
        throw ParseError("input_events must be an array");
    for (const auto& item : events)
        plant.input_events.insert(
            parse_event_set(item, &plant.input_alphabet, "input event"));
    for (auto& n : parse_name_array(require(doc, "controllable"), "controllable"))
        plant.controllable.insert(std::move(n));
    for (auto& n : parse_name_array(require(doc, "uncontrollable"), "uncontrollable"))
        plant.uncontrollable.insert(std::move(n));
    for (const auto& n : plant.controllable)
        if (plant.uncontrollable.count(n) > 0)
            throw ParseError("event \"" + n +
                             "\" declared both controllable and uncontrollable");

    for (auto& n : parse_name_array(require(doc, "states"), "states"))
        plant.states.insert(std::move(n));
    if (plant.states.empty())
        throw ParseError("empty state set");
    plant.initial = require_string(doc, "initial");
    if (plant.states.count(plant.initial) == 0)
        throw ParseError("initial state \"" + plant.initial + "\" not declared");
    for (auto& n : parse_name_array(require(doc, "marked"), "marked")) {
        if (plant.states.count(n) == 0)
            throw ParseError("marked state \"" + n + "\" not declared");
        plant.marked.insert(std::move(n));
    }

    check_disjoint_name_spaces(plant);

    const json& transitions = require(doc, "transitions");
    if (!transitions.is_array())
        throw ParseError("transitions must be an array");
    for (const auto& t : transitions) {
        Name from = require_string(t, "from");
        Name to = require_string(t, "to");
        if (plant.states.count(from) == 0 || plant.states.count(to) == 0)
            throw ParseError("transition references undeclared state \"" +
                             (plant.states.count(from) == 0 ? from : to) + "\"");
        const json& inputs = require(t, "inputs");
        if (!inputs.is_array() || inputs.empty())
            throw ParseError("transition \"inputs\" must be a non-empty array");
        InternalEvent event = parse_internal(require(t, "event"), plant);
        OutputEvent output =
            parse_event_set(require(t, "output"), &plant.output_alphabet, "output");
        // An edge may carry several input events; expand to one transition
        // per member.
        for (const auto& item : inputs) {
            InputEvent input =
                parse_event_set(item, &plant.input_alphabet, "input event");
            if (plant.input_events.count(input) == 0)
                throw ParseError("transition uses undeclared input event " +
                                 input.to_string());
            try {
                plant.add_transition(from, input, event, output, to);
            } catch (const ModelError& e) {
                throw ParseError(e.what());
            }
        }
    }

    return plant;
}

SpecTransducer parse_spec_doc(const json& doc) {
    SpecTransducer spec;
    for (auto& n : parse_name_array(require(doc, "states"), "states"))
        spec.states.insert(std::move(n));
    if (spec.states.empty())
        throw ParseError("empty state set");
    spec.initial = require_string(doc, "initial");
    if (spec.states.count(spec.initial) == 0)
        throw ParseError("initial state \"" + spec.initial + "\" not declared");
    for (auto& n : parse_name_array(require(doc, "marked"), "marked")) {
        if (spec.states.count(n) == 0)
            throw ParseError("marked state \"" + n + "\" not declared");
        spec.marked.insert(std::move(n));
    }

    const json& transitions = require(doc, "transitions");
    if (!transitions.is_array())
        throw ParseError("transitions must be an array");
    for (const auto& t : transitions) {
        Name from = require_string(t, "from");
        Name to = require_string(t, "to");
        if (spec.states.count(from) == 0 || spec.states.count(to) == 0)
            throw ParseError("transition references undeclared state \"" +
                             (spec.states.count(from) == 0 ? from : to) + "\"");
        InputEvent input = parse_event_set(require(t, "input"), nullptr, "input event");
        OutputEvent output = parse_event_set(require(t, "output"), nullptr, "output");
        try {
            spec.add_transition(from, input, output, to);
        } catch (const ModelError& e) {
            throw ParseError(e.what());
        }
    }
    return spec;
}

ordered_json event_set_to_json(const EventSet& e) {
    if (e.is_silent())
        return ordered_json("eps");
    return ordered_json(e.names());
}

ordered_json sorted_names(const std::set<Name>& names) {
    return ordered_json(std::vector<Name>(names.begin(), names.end()));
}

} // namespace

Model parse_model(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object())
        throw ParseError("model document must be a single object");
    std::string kind = require_string(doc, "kind");
    if (kind == "plant")
        return parse_plant_doc(doc);
    if (kind == "spec")
        return parse_spec_doc(doc);
    throw ParseError("unknown model kind \"" + kind + "\"");
}

OpenDes parse_plant(const std::string& text) {
    Model m = parse_model(text);
    if (auto* plant = std::get_if<OpenDes>(&m))
        return std::move(*plant);
    throw ParseError("expected a plant document");
}

SpecTransducer parse_spec(const std::string& text) {
    Model m = parse_model(text);
    if (auto* spec = std::get_if<SpecTransducer>(&m))
        return std::move(*spec);
    throw ParseError("expected a spec document");
}

std::string print_model(const OpenDes& plant) {
    ordered_json doc;
    doc["kind"] = "plant";
    doc["input_alphabet"] = sorted_names(plant.input_alphabet);
    doc["output_alphabet"] = sorted_names(plant.output_alphabet);
    ordered_json events = ordered_json::array();
    for (const auto& e : plant.input_events)
        events.push_back(event_set_to_json(e));
    doc["input_events"] = std::move(events);
    doc["controllable"] = sorted_names(plant.controllable);
    doc["uncontrollable"] = sorted_names(plant.uncontrollable);
    doc["states"] = sorted_names(plant.states);
    doc["initial"] = plant.initial;
    doc["marked"] = sorted_names(plant.marked);
    ordered_json transitions = ordered_json::array();
    for (const auto& [key, value] : plant.transitions) {
        ordered_json t;
        t["from"] = std::get<0>(key);
        t["inputs"] = ordered_json::array({event_set_to_json(std::get<1>(key))});
        t["event"] = std::get<2>(key).is_stutter() ? "eps" : std::get<2>(key).name();
        t["output"] = event_set_to_json(value.first);
        t["to"] = value.second;
        transitions.push_back(std::move(t));
    }
    doc["transitions"] = std::move(transitions);
    return doc.dump(2) + "\n";
}

std::string print_model(const SpecTransducer& spec) {
    ordered_json doc;
    doc["kind"] = "spec";
    doc["states"] = sorted_names(spec.states);
    doc["initial"] = spec.initial;
    doc["marked"] = sorted_names(spec.marked);
    ordered_json transitions = ordered_json::array();
    for (const auto& [key, value] : spec.transitions) {
        ordered_json t;
        t["from"] = key.first;
        t["input"] = event_set_to_json(key.second);
        t["output"] = event_set_to_json(value.first);
        t["to"] = value.second;
        transitions.push_back(std::move(t));
    }
    doc["transitions"] = std::move(transitions);
    return doc.dump(2) + "\n";
}

std::string fingerprint(const OpenDes& plant) {
    std::string canonical = print_model(plant);
    uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

} // namespace rdes
