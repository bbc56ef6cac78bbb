#include "rdes/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdes/conditions.hpp"
#include "rdes/dot_export.hpp"
#include "rdes/errors.hpp"
#include "rdes/language.hpp"
#include "rdes/model_io.hpp"
#include "rdes/supervisor.hpp"

namespace rdes {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write file: " + path);
    out << content;
}

/// Tokens are "{a,b}" or "eps", whitespace separated.
std::vector<InputEvent> parse_input_word(const std::string& text) {
    std::vector<InputEvent> word;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        if (token == "eps") {
            word.push_back(InputEvent::silent());
            continue;
        }
        if (token.size() < 2 || token.front() != '{' || token.back() != '}')
            throw ParseError("bad input event token \"" + token +
                             "\" (expected {a,b} or eps)");
        std::vector<Name> names;
        std::string body = token.substr(1, token.size() - 2);
        std::istringstream items(body);
        std::string item;
        while (std::getline(items, item, ','))
            if (!item.empty())
                names.push_back(item);
        word.push_back(InputEvent(std::move(names)));
    }
    return word;
}

std::size_t arena_node_cap() {
    if (const char* env = std::getenv("RDES_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultArenaNodeCap;
}

ordered_json verdict_json(const CheckVerdict& verdict) {
    ordered_json doc;
    doc["holds"] = verdict.holds;
    doc["witness"] = verdict.witness_string();
    doc["method"] = verdict.method;
    return doc;
}

int cmd_validate(const std::string& path, std::ostream& out) {
    Model model = parse_model(slurp(path));
    ordered_json doc;
    bool ok = true;
    if (auto* plant = std::get_if<OpenDes>(&model)) {
        ValidationReport report = validate_plant(*plant);
        ok = report.ok();
        doc["kind"] = "validation-report";
        doc["model"] = "plant";
        doc["ok"] = report.ok();
        doc["unreachable"] = report.unreachable;
        ordered_json pairs = ordered_json::array();
        for (const auto& [state, input] : report.not_input_enabled)
            pairs.push_back(state + ":" + input.to_string());
        doc["not_input_enabled"] = std::move(pairs);
        doc["partition_violations"] = report.partition_violations;
    } else {
        const auto& spec = std::get<SpecTransducer>(model);
        std::set<InputEvent> inputs = spec.input_events();
        ordered_json incomplete = ordered_json::array();
        for (const auto& q : spec.states)
            for (const auto& x : inputs)
                if (!spec.step(q, x))
                    incomplete.push_back(q + ":" + x.to_string());
        bool has_marked = spec.has_marked_word();
        ok = incomplete.empty() && has_marked;
        doc["kind"] = "validation-report";
        doc["model"] = "spec";
        doc["ok"] = ok;
        doc["not_input_complete"] = std::move(incomplete);
        doc["has_marked_word"] = has_marked;
    }
    out << doc.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_check(const std::string& plant_path, const std::string& spec_path,
              const std::string& mode, std::ostream& out) {
    OpenDes plant = complete_inputs(parse_plant(slurp(plant_path)));
    SpecTransducer spec = parse_spec(slurp(spec_path));

    bool want_literal = mode == "literal" || mode == "both";
    bool want_local = mode == "local" || mode == "both";

    ordered_json doc;
    doc["kind"] = "check-report";
    doc["mode"] = mode;
    ordered_json witnesses;
    bool ok = true;

    if (want_literal) {
        CheckVerdict v = check_output_controllability(
            plant, spec, ControllabilityMode::Literal);
        doc["output_controllable_literal"] = v.holds;
        witnesses["output_controllable_literal"] = v.witness_string();
        ok = ok && v.holds;
    }
    if (want_local) {
        CheckVerdict v =
            check_output_controllability(plant, spec, ControllabilityMode::Local);
        doc["output_controllable_local"] = v.holds;
        witnesses["output_controllable_local"] = v.witness_string();
        ok = ok && v.holds;
    }
    CheckVerdict closed = check_closedness(plant, spec);
    doc["closed"] = closed.holds;
    witnesses["closed"] = closed.witness_string();
    doc["witnesses"] = std::move(witnesses);

    out << doc.dump(2) << "\n";
    // Closedness is reported but does not gate the exit status; the mode
    // selects which controllability verdicts do.
    return ok ? 0 : 1;
}

int cmd_synth(const std::string& plant_path, const std::string& spec_path,
              const std::string& out_path, const std::string& dot_path,
              int depth, std::ostream& out) {
    OpenDes plant = parse_plant(slurp(plant_path));
    SpecTransducer spec = parse_spec(slurp(spec_path));

    SynthesisOptions options;
    options.verify_depth = depth;
    options.node_cap = arena_node_cap();
    SynthesisResult result = synthesize(plant, spec, options);

    ordered_json doc;
    doc["kind"] = "synthesis-report";
    doc["realizable"] = result.realizable;
    ordered_json conditions;
    conditions["output_controllable_literal"] =
        verdict_json(result.controllability_literal);
    conditions["output_controllable_local"] =
        verdict_json(result.controllability_local);
    conditions["closed"] = verdict_json(result.closedness);
    doc["conditions"] = std::move(conditions);
    ordered_json arena;
    arena["env_nodes"] = result.arena_stats.env_nodes;
    arena["sup_nodes"] = result.arena_stats.sup_nodes;
    arena["plant_nodes"] = result.arena_stats.plant_nodes;
    arena["edges"] = result.arena_stats.edges;
    arena["losing"] = result.arena_stats.losing;
    arena["marked"] = result.arena_stats.marked;
    arena["winning"] = result.arena_stats.winning;
    arena["realizable"] = result.arena_stats.realizable;
    doc["arena"] = std::move(arena);
    if (result.verification) {
        const VerificationReport& v = *result.verification;
        ordered_json ver;
        ver["safe_equality"] = v.safe_equality.holds;
        ver["marked_product_equality"] = v.marked_product_equality.holds;
        ver["marked_plant_equality"] = v.marked_plant_equality.holds;
        ver["marked_plant_witness"] =
            v.marked_plant_equality.witness
                ? to_string(*v.marked_plant_equality.witness)
                : "";
        ver["nonblocking"] = v.nonblocking.nonblocking;
        ver["marking_divergence"] = v.marking_divergence;
        ver["bounded_cross_check_ok"] = v.bounded_cross_check_ok;
        doc["verification"] = std::move(ver);
    }
    out << doc.dump(2) << "\n";

    if (result.realizable && !out_path.empty())
        spill(out_path, print_supervisor(*result.supervisor));
    if (!dot_path.empty()) {
        OpenDes completed = complete_inputs(plant);
        SafetyAutomaton ak(spec);
        GameArena arena_graph = build_arena(completed, ak, options.node_cap);
        GameSolution solution = solve(arena_graph);
        if (solution.realizable) {
            auto strategy = extract_strategy(arena_graph, solution);
            spill(dot_path, export_dot(arena_graph, &solution, &strategy));
        } else {
            spill(dot_path, export_dot(arena_graph, &solution, nullptr));
        }
    }
    return result.realizable ? 0 : 1;
}

int cmd_enum(const std::string& plant_path, int depth, bool marked, bool io,
             std::ostream& out) {
    OpenDes plant = complete_inputs(parse_plant(slurp(plant_path)));
    if (io) {
        for (const auto& w : io_language(plant, depth, marked))
            out << to_string(w) << "\n";
    } else {
        for (const auto& w : enumerate_extended(plant, depth, marked))
            out << to_string(w) << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& plant_path, const std::string& sup_path,
                 const std::string& env, const std::string& word, int steps,
                 std::uint64_t seed, std::ostream& out) {
    OpenDes plant = complete_inputs(parse_plant(slurp(plant_path)));
    SupervisorMachine sup = parse_supervisor(slurp(sup_path));
    ClosedLoop cl = compose(plant, sup);

    EnvPolicy policy;
    if (env == "random")
        policy = EnvPolicy::random();
    else if (env == "adversarial")
        policy = EnvPolicy::adversarial();
    else if (env == "script")
        policy = EnvPolicy::scripted(parse_input_word(word));
    else
        throw ParseError("unknown environment policy \"" + env +
                         "\" (expected random, adversarial or script)");

    for (const auto& step : simulate(cl, policy, steps, seed))
        out << step.to_string() << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"reactive supervisor synthesis for open discrete-event systems"};
    app.require_subcommand(1);

    std::string model_path, plant_path, spec_path, sup_path;
    std::string out_path, dot_path;
    std::string mode = "both";
    std::string env = "random";
    std::string word;
    int depth = 4;
    int steps = 10;
    std::uint64_t seed = 0;
    bool marked = false, io = false, extended = false;

    auto* validate = app.add_subcommand("validate", "validate a model file");
    validate->add_option("model", model_path, "model file")->required();

    auto* check = app.add_subcommand(
        "check", "output controllability and closedness checks");
    check->add_option("--plant", plant_path, "plant file")->required();
    check->add_option("--spec", spec_path, "specification file")->required();
    check->add_option("--mode", mode, "literal, local or both")
        ->check(CLI::IsMember({"literal", "local", "both"}));

    auto* synth = app.add_subcommand("synth", "synthesize a supervisor");
    synth->add_option("--plant", plant_path, "plant file")->required();
    synth->add_option("--spec", spec_path, "specification file")->required();
    synth->add_option("--out", out_path, "write the supervisor here");
    synth->add_option("--dot", dot_path, "write the solved arena as DOT");
    synth->add_option("--depth", depth, "verification cross-check depth");

    auto* enumerate = app.add_subcommand("enum", "enumerate bounded languages");
    enumerate->add_option("--plant", plant_path, "plant file")->required();
    enumerate->add_option("--depth", depth, "maximum word length");
    enumerate->add_flag("--marked", marked, "marked words only");
    enumerate->add_flag("--io", io, "input/output words");
    enumerate->add_flag("--extended", extended, "extended words (default)");

    auto* sim = app.add_subcommand("simulate", "run the closed loop");
    sim->add_option("--plant", plant_path, "plant file")->required();
    sim->add_option("--sup", sup_path, "supervisor file")->required();
    sim->add_option("--env", env, "random, adversarial or script");
    sim->add_option("--word", word, "script input word, e.g. \"{x1} {x2}\"");
    sim->add_option("--steps", steps, "number of steps");
    sim->add_option("--seed", seed, "random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate))
            return cmd_validate(model_path, out);
        if (app.got_subcommand(check))
            return cmd_check(plant_path, spec_path, mode, out);
        if (app.got_subcommand(synth))
            return cmd_synth(plant_path, spec_path, out_path, dot_path, depth,
                             out);
        if (app.got_subcommand(enumerate)) {
            if (io && extended)
                throw ParseError("--io and --extended are mutually exclusive");
            return cmd_enum(plant_path, depth, marked, io, out);
        }
        if (app.got_subcommand(sim))
            return cmd_simulate(plant_path, sup_path, env, word, steps, seed,
                                out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const LimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace rdes
