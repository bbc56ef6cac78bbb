#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdes/errors.hpp"
#include "rdes/model_io.hpp"
#include "rdes/supervisor.hpp"

#include "support/oracle.hpp"
#include "support/random_models.hpp"
#include "support/test_util.hpp"

using namespace rdes;
using namespace rdes::test;

namespace {

struct DemoSynthesis {
    OpenDes plant;
    SpecTransducer spec;
    SynthesisResult result;

    DemoSynthesis()
        : plant(load_plant("demo_plant.json")),
          spec(load_spec("demo_spec.json")),
          result(synthesize(plant, spec)) {}

    const SupervisorMachine& sup() const { return *result.supervisor; }
    const ClosedLoop& loop() const { return *result.closed_loop; }
};

std::set<Name> executable(const OpenDes& plant, const SupervisorMachine& sup,
                          int memory, const Name& plant_state,
                          const InputEvent& x) {
    const ControlPattern& theta = sup.pattern(memory, x);
    std::set<Name> fired;
    for (const auto& move : plant.enabled_moves(plant_state, x))
        if (theta.allows(move.event) && !move.event.is_stutter())
            fired.insert(move.event.name());
    return fired;
}

IoWord io_word(std::initializer_list<std::pair<const char*, const char*>> steps) {
    IoWord w;
    for (const auto& [x, y] : steps)
        w.push_back({InputEvent({x}), OutputEvent({y})});
    return w;
}

} // namespace

TEST_CASE("synthesis on the demo game is realizable") {
    DemoSynthesis demo;
    CHECK(demo.result.realizable);
    REQUIRE(demo.result.supervisor.has_value());
    REQUIRE(demo.result.closed_loop.has_value());
    CHECK(demo.result.arena_stats.realizable);
    CHECK(demo.result.arena_stats.winning > 0);

    OpenDes completed = complete_inputs(demo.plant);
    const SupervisorMachine& sup = demo.sup();

    SUBCASE("the supervisor's executable sets match the winning strategy") {
        int m0 = sup.initial;
        CHECK(executable(completed, sup, m0, "q0", in_ev({"x1"})) ==
              std::set<Name>{"s1"});
        CHECK(executable(completed, sup, m0, "q0", in_ev({"x2"})) ==
              std::set<Name>{"s2"});

        // after (x1, s1) the plant sits at q1
        int m1 = *sup.next(m0, in_ev({"x1"}), InternalEvent("s1"));
        CHECK(executable(completed, sup, m1, "q1", in_ev({"x1"})) ==
              std::set<Name>{"su"});
        CHECK(executable(completed, sup, m1, "q1", in_ev({"x2"})) ==
              std::set<Name>{"s2"});

        // after (x2, s2) the plant sits at q2
        int m2 = *sup.next(m0, in_ev({"x2"}), InternalEvent("s2"));
        CHECK(executable(completed, sup, m2, "q2", in_ev({"x2"})) ==
              std::set<Name>{"su"});
    }

    SUBCASE("patterns always include the uncontrollable events") {
        for (const auto& [key, theta] : sup.pattern_of)
            for (const auto& u : completed.uncontrollable)
                CHECK(theta.allows(InternalEvent(u)));
    }

    SUBCASE("memory states are exactly the strategy-reachable ones") {
        CHECK(sup.memory.size() == 5); // (q0,k0) (q1,k1) (q2,k2) (q2,m2) (q3,m3)
    }
}

TEST_CASE("the composed closed loop realizes the specification's words") {
    DemoSynthesis demo;
    const ClosedLoop& cl = demo.loop();

    SUBCASE("no closed-loop word ever reaches the sink") {
        SafetyAutomaton ak(demo.spec);
        for (const auto& w : oracle_extended(cl.graph, 4, false)) {
            IoWord io;
            for (const auto& s : w)
                io.push_back({s.input, s.output});
            CHECK_FALSE(ak.is_bottom(ak.run(io)));
        }
    }

    SUBCASE("depth-2 product-marked language is exactly the four words") {
        OpenDes product_view = cl.graph; // marked is already product marking
        std::set<IoWord> got = oracle_io(product_view, 2, true);
        std::set<IoWord> expected = {
            io_word({{"x1", "y1"}, {"x2", "y1"}}),
            io_word({{"x1", "y1"}, {"x1", "y2"}}),
            io_word({{"x2", "y2"}, {"x2", "y1"}}),
            io_word({{"x2", "y2"}, {"x1", "y2"}}),
        };
        CHECK(got == expected);
    }

    SUBCASE("the closed loop stays input-enabled") {
        for (const auto& q : cl.graph.states)
            for (const auto& x : cl.graph.input_events)
                CHECK_FALSE(cl.graph.enabled_moves(q, x).empty());
    }

    SUBCASE("every reachable state is within two steps of a marked state") {
        // breadth-first forward distances to product-marked states
        for (const auto& q : cl.graph.states) {
            std::set<Name> layer{q};
            bool found = false;
            for (int d = 0; d <= 2 && !found; ++d) {
                for (const auto& s : layer)
                    if (cl.product_marked.count(s) > 0) {
                        found = true;
                        break;
                    }
                std::set<Name> next;
                for (const auto& s : layer)
                    for (const auto& [key, value] : cl.graph.transitions)
                        if (std::get<0>(key) == s)
                            next.insert(value.second);
                layer = std::move(next);
            }
            CAPTURE(q);
            CHECK(found);
        }
    }
}

TEST_CASE("the closed-loop language is the pattern-filtered plant language") {
    DemoSynthesis demo;
    const ClosedLoop& cl = demo.loop();
    const SupervisorMachine& sup = demo.sup();
    OpenDes completed = complete_inputs(demo.plant);

    // replay a plant word against the supervisor; defined iff every step's
    // event is in the pattern at its history
    auto allowed = [&](const ExtendedWord& w) {
        int memory = sup.initial;
        for (const auto& step : w) {
            if (!sup.pattern(memory, step.input).allows(step.event))
                return false;
            auto next = sup.next(memory, step.input, step.event);
            if (!next)
                return false;
            memory = *next;
        }
        return true;
    };

    std::set<ExtendedWord> loop_words = oracle_extended(cl.graph, 3, false);
    for (const auto& w : oracle_extended(completed, 3, false)) {
        CAPTURE(to_string(w));
        CHECK(allowed(w) == (loop_words.count(w) > 0));
    }
}

TEST_CASE("a permissive supervisor leaves the plant language unchanged") {
    OpenDes plant = complete_inputs(load_plant("demo_plant.json"));
    SupervisorMachine sup = permissive_supervisor(plant);
    ClosedLoop cl = compose(plant, sup);

    std::set<IoWord> plant_io = oracle_io(plant, 3, false);
    std::set<IoWord> loop_io = oracle_io(cl.graph, 3, false);
    CHECK(plant_io == loop_io);
}

TEST_CASE("compose rejects a supervisor for a different plant") {
    DemoSynthesis demo;
    OpenDes other = complete_inputs(load_plant("chain_plant.json"));
    CHECK_THROWS_AS(compose(other, demo.sup()), ModelError);
}

TEST_CASE("non-blocking verdicts") {
    DemoSynthesis demo;

    SUBCASE("the synthesized loop is non-blocking under product marking") {
        NonblockingVerdict v = check_nonblocking(demo.loop(), Marking::Product);
        CHECK(v.nonblocking);
        CHECK_FALSE(v.witness.has_value());
    }

    SUBCASE("a loop with unreachable marking blocks with a witness") {
        // supervise the chain plant with everything enabled, then strip the
        // marking so no state is coaccessible
        OpenDes chain = complete_inputs(load_plant("chain_plant.json"));
        SupervisorMachine sup = permissive_supervisor(chain);
        ClosedLoop cl = compose(chain, sup);
        cl.product_marked.clear();
        NonblockingVerdict v = check_nonblocking(cl, Marking::Product);
        CHECK_FALSE(v.nonblocking);
        REQUIRE(v.witness.has_value());
    }

    SUBCASE("all states marked is trivially non-blocking") {
        OpenDes chain = complete_inputs(load_plant("chain_plant.json"));
        SupervisorMachine sup = permissive_supervisor(chain);
        ClosedLoop cl = compose(chain, sup);
        cl.product_marked = cl.graph.states;
        CHECK(check_nonblocking(cl, Marking::Product).nonblocking);
    }
}

TEST_CASE("verification against the specification") {
    DemoSynthesis demo;
    REQUIRE(demo.result.verification.has_value());
    const VerificationReport& report = *demo.result.verification;

    CHECK(report.safe_equality.holds);
    CHECK(report.marked_product_equality.holds);
    CHECK(report.nonblocking.nonblocking);
    CHECK(report.bounded_cross_check_ok);

    SUBCASE("plant marking diverges with the expected witness") {
        CHECK_FALSE(report.marked_plant_equality.holds);
        REQUIRE(report.marked_plant_equality.witness.has_value());
        CHECK(*report.marked_plant_equality.witness ==
              io_word({{"x2", "y2"}}));
        CHECK(report.marking_divergence);
    }
}

TEST_CASE("synthesis verdicts and errors") {
    OpenDes plant = load_plant("demo_plant.json");

    SUBCASE("a specification the plant cannot follow is unrealizable") {
        SpecTransducer strict = load_spec("demo_spec_strict.json");
        SynthesisResult result = synthesize(plant, strict);
        CHECK_FALSE(result.realizable);
        CHECK_FALSE(result.supervisor.has_value());
    }

    SUBCASE("an empty specification is an input error") {
        SpecTransducer spec = load_spec("demo_spec.json");
        spec.marked.clear();
        CHECK_THROWS_AS(synthesize(plant, spec), ModelError);
    }

    SUBCASE("an invalid plant is an input error") {
        OpenDes bad = plant;
        bad.states.insert("island");
        SpecTransducer spec = load_spec("demo_spec.json");
        CHECK_THROWS_AS(synthesize(bad, spec), ModelError);
    }
}

TEST_CASE("simulation") {
    DemoSynthesis demo;
    const ClosedLoop& cl = demo.loop();

    SUBCASE("a scripted run follows the specification's outputs") {
        EnvPolicy policy =
            EnvPolicy::scripted({in_ev({"x1"}), in_ev({"x1"})});
        Trace trace = simulate(cl, policy, 10, 0);
        REQUIRE(trace.size() == 2);
        CHECK(trace[0].output == out_ev({"y1"}));
        CHECK(trace[0].fired == InternalEvent("s1"));
        CHECK(trace[1].output == out_ev({"y2"}));
        CHECK(trace[1].fired == InternalEvent("su"));
        CHECK(trace[1].state.find("q3@") == 0);
    }

    SUBCASE("zero steps yield an empty trace") {
        CHECK(simulate(cl, EnvPolicy::random(), 0, 7).empty());
    }

    SUBCASE("identical seeds reproduce the trace") {
        Trace a = simulate(cl, EnvPolicy::random(), 25, 42);
        Trace b = simulate(cl, EnvPolicy::random(), 25, 42);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(a[i].to_string() == b[i].to_string());
    }

    SUBCASE("every fired event lies in the pattern announced for the step") {
        Trace trace = simulate(cl, EnvPolicy::random(), 40, 11);
        for (const auto& step : trace)
            CHECK(step.pattern.allows(step.fired));
    }

    SUBCASE("adversarial runs stay safe") {
        SafetyAutomaton ak(demo.spec);
        Trace trace = simulate(cl, EnvPolicy::adversarial(), 30, 3);
        IoWord io;
        for (const auto& step : trace)
            io.push_back({step.input, step.output});
        CHECK_FALSE(ak.is_bottom(ak.run(io)));
    }

    SUBCASE("scripts with undeclared events are rejected") {
        EnvPolicy policy = EnvPolicy::scripted({in_ev({"zz"})});
        CHECK_THROWS_AS(simulate(cl, policy, 5, 0), ModelError);
    }

    SUBCASE("trace lines use the step format") {
        EnvPolicy policy = EnvPolicy::scripted({in_ev({"x1"})});
        Trace trace = simulate(cl, policy, 1, 0);
        REQUIRE(trace.size() == 1);
        CHECK(trace[0].to_string() ==
              "in={x1} pattern={s1,su} fired=s1 out={y1} state=q1@m1");
    }
}

TEST_CASE("supervisor serialization round-trips through compose") {
    DemoSynthesis demo;
    std::string text = print_supervisor(demo.sup());
    SupervisorMachine reloaded = parse_supervisor(text);

    CHECK(reloaded.memory.size() == demo.sup().memory.size());
    CHECK(print_supervisor(reloaded) == text);

    OpenDes completed = complete_inputs(demo.plant);
    ClosedLoop a = compose(completed, demo.sup());
    ClosedLoop b = compose(completed, reloaded);
    CHECK(a.graph == b.graph);
    CHECK(a.product_marked == b.product_marked);

    SUBCASE("scripted simulation agrees after the round trip") {
        EnvPolicy policy = EnvPolicy::scripted({in_ev({"x2"}), in_ev({"x2"})});
        Trace ta = simulate(a, policy, 5, 9);
        Trace tb = simulate(b, policy, 5, 9);
        REQUIRE(ta.size() == tb.size());
        for (size_t i = 0; i < ta.size(); ++i)
            CHECK(ta[i].to_string() == tb[i].to_string());
    }
}

TEST_CASE("every bounded closed-loop word is a prefix of a marked word") {
    DemoSynthesis demo;
    const ClosedLoop& cl = demo.loop();
    int diameter = static_cast<int>(cl.graph.states.size());

    for (int depth = 0; depth <= 3; ++depth) {
        std::set<IoWord> language = oracle_io(cl.graph, depth, false);
        OpenDes product_view = cl.graph;
        std::set<IoWord> marked =
            oracle_io(product_view, depth + diameter, true);
        std::set<IoWord> closure;
        for (const auto& w : marked)
            for (size_t len = 0; len <= w.size(); ++len)
                closure.insert(IoWord(w.begin(), w.begin() + len));
        for (const auto& w : language) {
            CAPTURE(to_string(w));
            CHECK(closure.count(w) == 1);
        }
    }
}

TEST_CASE("a declared silent input event runs through the whole pipeline") {
    OpenDes plant;
    plant.input_alphabet = {"a"};
    plant.output_alphabet = {"u", "v"};
    plant.input_events = {InputEvent::silent(), in_ev({"a"})};
    plant.controllable = {"c"};
    plant.states = {"p0", "p1"};
    plant.initial = "p0";
    plant.marked = {"p1"};
    plant.add_transition("p0", in_ev({"a"}), InternalEvent("c"), out_ev({"u"}),
                         "p1");
    plant.add_transition("p0", InputEvent::silent(), InternalEvent("c"),
                         out_ev({"v"}), "p0");

    OpenDes completed = complete_inputs(plant);
    CHECK(validate_plant(completed).ok());

    // silent-input steps occupy positions in the extended language
    auto words = enumerate_extended(completed, 2, false);
    ExtendedWord silent_step = {
        {InputEvent::silent(), InternalEvent("c"), out_ev({"v"})}};
    CHECK(std::find(words.begin(), words.end(), silent_step) != words.end());

    // input-word realizability sees through silent-input detours
    CHECK(check_sequential_relation(completed, 3).ok());

    SpecTransducer spec;
    spec.states = {"k0", "k1"};
    spec.initial = "k0";
    spec.marked = {"k1"};
    spec.add_transition("k0", in_ev({"a"}), out_ev({"u"}), "k1");
    spec.add_transition("k0", InputEvent::silent(), out_ev({"v"}), "k0");
    spec.add_transition("k1", in_ev({"a"}), OutputEvent::silent(), "k1");
    spec.add_transition("k1", InputEvent::silent(), OutputEvent::silent(), "k1");

    SynthesisResult result = synthesize(plant, spec);
    CHECK(result.realizable);
    REQUIRE(result.closed_loop.has_value());
    CHECK(result.verification->nonblocking.nonblocking);

    // the environment may script the silent input explicitly
    Trace trace = simulate(*result.closed_loop,
                           EnvPolicy::scripted({in_ev({"a"}),
                                                InputEvent::silent()}),
                           5, 0);
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].output == out_ev({"u"}));
    CHECK(trace[1].input.is_silent());
    CHECK(trace[1].fired.is_stutter());
    CHECK(trace[1].output.is_silent());
}

TEST_CASE("supervisor documents reject structural errors") {
    CHECK_THROWS_AS(parse_supervisor("{\"kind\": \"plant\"}"), ParseError);
    CHECK_THROWS_AS(parse_supervisor("{nope"), ParseError);

    std::string bad_ref = R"({
      "kind": "supervisor",
      "states": ["m0"], "initial": "m0", "marked": [],
      "fingerprint": "",
      "pattern": [{"state": "m9", "input": ["x1"], "enable": []}],
      "update": []
    })";
    CHECK_THROWS_AS(parse_supervisor(bad_ref), ParseError);
}

TEST_CASE("realizable random syntheses produce safe, live closed loops") {
    std::mt19937_64 rng(60089);
    RandomPlantConfig cfg;
    cfg.max_states = 4;
    cfg.max_controllable = 2;

    int total = 0, realizable = 0;
    for (int i = 0; i < 120; ++i) {
        OpenDes plant = random_plant(rng, cfg);
        SpecTransducer spec = random_spec(rng, plant, 3);
        if (!spec.has_marked_word())
            continue;
        CAPTURE(i);
        ++total;

        SynthesisResult result = synthesize(plant, spec);
        if (!result.realizable)
            continue;
        ++realizable;

        const ClosedLoop& cl = *result.closed_loop;
        SafetyAutomaton ak(spec);
        for (const auto& w : oracle_extended(cl.graph, 4, false)) {
            IoWord io;
            for (const auto& s : w)
                io.push_back({s.input, s.output});
            CHECK_FALSE(ak.is_bottom(ak.run(io)));
        }
        CHECK(check_nonblocking(cl, Marking::Product).nonblocking);
    }
    CHECK(total > 60);
    CHECK(realizable > 5);
}
