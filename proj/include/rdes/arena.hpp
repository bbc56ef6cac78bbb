#ifndef RDES_ARENA_HPP_
#define RDES_ARENA_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rdes/patterns.hpp"
#include "rdes/plant.hpp"
#include "rdes/spec_transducer.hpp"

namespace rdes {

inline constexpr std::size_t kDefaultArenaNodeCap = 1000000;

/// The turn-based arena over the product of the plant with the completed
/// acceptor. Environment nodes are product states, supervisor nodes pair an
/// environment node with the input just received, plant nodes additionally
/// fix the chosen control pattern. Every edge goes environment → supervisor
/// → plant → environment.
///
/// Only nodes reachable from the initial environment node are built, and
/// losing environment nodes (acceptor component at the sink) are not
/// expanded further.
struct GameArena {
    struct EnvNode {
        Name plant_state;
        SafetyAutomaton::State spec_state;
    };
    struct SupNode {
        int env;
        InputEvent input;
    };
    struct PlantNode {
        int sup;
        int pattern;
    };
    struct PlantEdge {
        InternalEvent event;
        OutputEvent output;
        int env;
    };

    OpenDes plant;
    SafetyAutomaton acceptor;
    std::vector<ControlPattern> patterns;

    std::vector<EnvNode> env_nodes;
    std::vector<SupNode> sup_nodes;
    std::vector<PlantNode> plant_nodes;

    /// Adjacency, indexed by the source node. Environment edges follow the
    /// canonical input order; supervisor edges follow the pattern order.
    std::vector<std::vector<std::pair<InputEvent, int>>> env_edges;
    std::vector<std::vector<std::pair<int, int>>> sup_edges;
    std::vector<std::vector<PlantEdge>> plant_edges;

    std::vector<bool> losing;
    std::vector<bool> marked;
    int initial_env = 0;

    std::size_t node_count() const {
        return env_nodes.size() + sup_nodes.size() + plant_nodes.size();
    }
    std::size_t edge_count() const;
    std::string env_label(int idx) const;
};

/// Forward exploration from the initial product state. Throws LimitError
/// when the node count exceeds `node_cap`.
GameArena build_arena(const OpenDes& plant, const SafetyAutomaton& acceptor,
                      std::size_t node_cap = kDefaultArenaNodeCap);

} // namespace rdes

#endif // RDES_ARENA_HPP_
