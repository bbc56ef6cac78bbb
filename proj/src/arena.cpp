#include "rdes/arena.hpp"

#include <deque>

#include "rdes/errors.hpp"

namespace rdes {

std::size_t GameArena::edge_count() const {
    std::size_t edges = 0;
    for (const auto& v : env_edges)
        edges += v.size();
    for (const auto& v : sup_edges)
        edges += v.size();
    for (const auto& v : plant_edges)
        edges += v.size();
    return edges;
}

std::string GameArena::env_label(int idx) const {
    const EnvNode& n = env_nodes[idx];
    return "(" + n.plant_state + "," + acceptor.name_of(n.spec_state) + ")";
}

GameArena build_arena(const OpenDes& plant, const SafetyAutomaton& acceptor,
                      std::size_t node_cap) {
    GameArena arena;
    arena.plant = plant;
    arena.acceptor = acceptor;
    arena.patterns = control_patterns(plant);

    std::map<std::pair<Name, SafetyAutomaton::State>, int> env_index;
    auto intern_env = [&](const Name& q, SafetyAutomaton::State s) {
        auto it = env_index.find({q, s});
        if (it != env_index.end())
            return std::pair<int, bool>{it->second, false};
        int idx = static_cast<int>(arena.env_nodes.size());
        env_index.emplace(std::pair<Name, SafetyAutomaton::State>{q, s}, idx);
        arena.env_nodes.push_back({q, s});
        arena.env_edges.emplace_back();
        arena.losing.push_back(acceptor.is_bottom(s));
        arena.marked.push_back(plant.is_marked(q) && acceptor.is_marked(s));
        return std::pair<int, bool>{idx, true};
    };

    auto check_cap = [&] {
        if (arena.node_count() > node_cap)
            throw LimitError("arena node cap exceeded (" +
                             std::to_string(node_cap) + " nodes)");
    };

    std::deque<int> frontier;
    arena.initial_env = intern_env(plant.initial, acceptor.initial()).first;
    frontier.push_back(arena.initial_env);

    while (!frontier.empty()) {
        int env = frontier.front();
        frontier.pop_front();
        if (arena.losing[env])
            continue; // the sink is absorbing; no need to expand behind it
        const Name plant_state = arena.env_nodes[env].plant_state;
        const SafetyAutomaton::State spec_state = arena.env_nodes[env].spec_state;

        for (const auto& x : plant.input_events) {
            int sup = static_cast<int>(arena.sup_nodes.size());
            arena.sup_nodes.push_back({env, x});
            arena.sup_edges.emplace_back();
            arena.env_edges[env].push_back({x, sup});
            check_cap();

            auto moves = plant.enabled_moves(plant_state, x);
            for (int p = 0; p < static_cast<int>(arena.patterns.size()); ++p) {
                int pnode = static_cast<int>(arena.plant_nodes.size());
                arena.plant_nodes.push_back({sup, p});
                arena.plant_edges.emplace_back();
                arena.sup_edges[sup].push_back({p, pnode});
                check_cap();

                for (const auto& move : moves) {
                    if (!arena.patterns[p].allows(move.event))
                        continue;
                    SafetyAutomaton::State next_spec =
                        acceptor.step(spec_state, x, move.output);
                    auto [succ, fresh] = intern_env(move.target, next_spec);
                    arena.plant_edges[pnode].push_back(
                        {move.event, move.output, succ});
                    if (fresh)
                        frontier.push_back(succ);
                    check_cap();
                }
            }
        }
    }

    return arena;
}

} // namespace rdes
