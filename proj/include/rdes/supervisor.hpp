#ifndef RDES_SUPERVISOR_HPP_
#define RDES_SUPERVISOR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "rdes/arena.hpp"
#include "rdes/conditions.hpp"
#include "rdes/language.hpp"
#include "rdes/patterns.hpp"
#include "rdes/plant.hpp"
#include "rdes/solver.hpp"
#include "rdes/spec_transducer.hpp"

namespace rdes {

/// Finite realization of a winning strategy: memory states are the
/// strategy-reachable winning environment nodes of the arena, renamed m0,
/// m1, ... in discovery order.
struct SupervisorMachine {
    std::vector<Name> memory;             // memory state names
    std::vector<Name> plant_component;    // underlying plant state, may be empty
    std::vector<bool> spec_marked;        // specification component is marked
    int initial = 0;

    std::map<std::pair<int, InputEvent>, ControlPattern> pattern_of;
    std::map<std::tuple<int, InputEvent, InternalEvent>, int> update;
    std::string plant_fingerprint;

    int index_of(const Name& memory_state) const;
    const ControlPattern& pattern(int memory_idx, const InputEvent& input) const;
    std::optional<int> next(int memory_idx, const InputEvent& input,
                            const InternalEvent& event) const;
};

SupervisorMachine realize_supervisor(const GameArena& arena,
                                     const std::map<int, int>& strategy);

/// The supervisor that enables every internal event everywhere.
SupervisorMachine permissive_supervisor(const OpenDes& plant);

/// The supervised plant. States are plant-state/memory pairs named
/// "q@m"; transitions are the plant's filtered by the pattern chosen at each
/// state. Carries both the plant marking and the product marking (plant and
/// specification components both marked).
struct ClosedLoop {
    OpenDes graph; // graph.marked is the product marking
    std::set<Name> plant_marked;
    std::set<Name> product_marked;
    std::map<Name, std::pair<Name, int>> origin; // state -> (plant state, memory)
    std::map<std::pair<Name, InputEvent>, ControlPattern> patterns;
};

ClosedLoop compose(const OpenDes& plant, const SupervisorMachine& sup);

enum class Marking { Plant, Product };

struct NonblockingVerdict {
    bool nonblocking = true;
    std::optional<XpWord> witness;
};

/// Non-blocking iff every reachable closed-loop state can reach a marked
/// state; the witness is a shortest input/internal word into a state that
/// cannot.
NonblockingVerdict check_nonblocking(const ClosedLoop& cl,
                                     Marking marking = Marking::Product);

struct EqualityVerdict {
    bool holds = true;
    std::optional<IoWord> witness;
};

/// Language-level verification of the closed loop against the
/// specification, decided exactly by subset construction over input/output
/// pairs and cross-checked by depth-bounded enumeration:
///  - safe_equality:            L_io of the loop equals the prefix closure
///                              of the specification's marked language;
///  - marked_product_equality:  product-marked loop language equals the
///                              marked language;
///  - marked_plant_equality:    plant-marked loop language equals the
///                              marked language.
struct VerificationReport {
    EqualityVerdict safe_equality;
    EqualityVerdict marked_product_equality;
    EqualityVerdict marked_plant_equality;
    NonblockingVerdict nonblocking;
    bool marking_divergence = false;
    bool bounded_cross_check_ok = true;
    int cross_check_depth = 0;
};

VerificationReport verify_specification(const ClosedLoop& cl,
                                        const SpecTransducer& spec, int depth);

struct ArenaStats {
    std::size_t env_nodes = 0;
    std::size_t sup_nodes = 0;
    std::size_t plant_nodes = 0;
    std::size_t edges = 0;
    std::size_t losing = 0;
    std::size_t marked = 0;
    std::size_t winning = 0;
    bool realizable = false;
};

struct SynthesisOptions {
    int verify_depth = 4;
    std::size_t node_cap = kDefaultArenaNodeCap;
};

/// End-to-end pipeline: validate, complete, run the condition checks, build
/// and solve the game, realize and verify the supervisor. Unrealizability is
/// a verdict; an empty specification or an invalid model is an error.
struct SynthesisResult {
    bool realizable = false;
    std::optional<SupervisorMachine> supervisor;
    std::optional<ClosedLoop> closed_loop;
    CheckVerdict controllability_literal;
    CheckVerdict controllability_local;
    CheckVerdict closedness;
    ArenaStats arena_stats;
    std::optional<VerificationReport> verification;
};

SynthesisResult synthesize(const OpenDes& plant, const SpecTransducer& spec,
                           const SynthesisOptions& options = {});

/// Environment policies for closed-loop simulation. The adversarial policy
/// steers away from marked states using cooperative distances on the closed
/// loop; the internal event is always resolved uniformly at random among the
/// pattern-enabled executable events.
struct EnvPolicy {
    enum class Kind { Random, Adversarial, Script };
    Kind kind = Kind::Random;
    std::vector<InputEvent> script;

    static EnvPolicy random() { return {Kind::Random, {}}; }
    static EnvPolicy adversarial() { return {Kind::Adversarial, {}}; }
    static EnvPolicy scripted(std::vector<InputEvent> word) {
        return {Kind::Script, std::move(word)};
    }
};

struct TraceStep {
    InputEvent input;
    ControlPattern pattern;
    InternalEvent fired;
    OutputEvent output;
    Name state; // closed-loop state reached by the step

    std::string to_string() const;
};

using Trace = std::vector<TraceStep>;

Trace simulate(const ClosedLoop& cl, const EnvPolicy& policy, int steps,
               std::uint64_t seed);

/// Supervisor serialization in the same document family as the models.
std::string print_supervisor(const SupervisorMachine& sup);
SupervisorMachine parse_supervisor(const std::string& text);

} // namespace rdes

#endif // RDES_SUPERVISOR_HPP_
