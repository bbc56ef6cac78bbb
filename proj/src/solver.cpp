#include "rdes/solver.hpp"

#include <deque>

#include "rdes/errors.hpp"

namespace rdes {

namespace {

enum class Kind { Env, Sup, Plant };

struct Sets {
    std::vector<bool> env, sup, plant;

    std::vector<bool>& of(Kind k) {
        switch (k) {
        case Kind::Env: return env;
        case Kind::Sup: return sup;
        default: return plant;
        }
    }
    const std::vector<bool>& of(Kind k) const {
        switch (k) {
        case Kind::Env: return env;
        case Kind::Sup: return sup;
        default: return plant;
        }
    }
};

struct ReverseEdges {
    std::vector<std::vector<int>> env_preds;   // plant nodes moving into an env node
    std::vector<std::vector<int>> sup_preds;   // env nodes offering a sup node
    std::vector<std::vector<int>> plant_preds; // sup nodes offering a plant node

    explicit ReverseEdges(const GameArena& arena)
        : env_preds(arena.env_nodes.size()),
          sup_preds(arena.sup_nodes.size()),
          plant_preds(arena.plant_nodes.size()) {
        for (size_t e = 0; e < arena.env_edges.size(); ++e)
            for (const auto& [x, sup] : arena.env_edges[e])
                sup_preds[sup].push_back(static_cast<int>(e));
        for (size_t s = 0; s < arena.sup_edges.size(); ++s)
            for (const auto& [p, pnode] : arena.sup_edges[s])
                plant_preds[pnode].push_back(static_cast<int>(s));
        for (size_t p = 0; p < arena.plant_edges.size(); ++p)
            for (const auto& edge : arena.plant_edges[p])
                env_preds[edge.env].push_back(static_cast<int>(p));
    }
};

/// Largest safe region given environment nodes already decided losing:
/// removes everything the environment/plant coalition can force into the
/// seed. Supervisor nodes die when every pattern choice is dead; environment
/// and plant nodes die on their first dead successor; plant nodes with no
/// executable event are dead outright. Worklist attractor, linear per call.
Sets safe_region(const GameArena& arena, const ReverseEdges& rev,
                 const std::vector<bool>& env_dead_seed) {
    Sets alive;
    alive.env.assign(arena.env_nodes.size(), true);
    alive.sup.assign(arena.sup_nodes.size(), true);
    alive.plant.assign(arena.plant_nodes.size(), true);

    std::vector<int> sup_alive_count(arena.sup_nodes.size(), 0);
    for (size_t s = 0; s < arena.sup_edges.size(); ++s)
        sup_alive_count[s] = static_cast<int>(arena.sup_edges[s].size());

    std::deque<std::pair<Kind, int>> dead;
    auto kill = [&](Kind k, int idx) {
        std::vector<bool>& set = alive.of(k);
        if (!set[idx])
            return;
        set[idx] = false;
        dead.push_back({k, idx});
    };

    for (size_t e = 0; e < arena.env_nodes.size(); ++e)
        if (env_dead_seed[e])
            kill(Kind::Env, static_cast<int>(e));
    for (size_t p = 0; p < arena.plant_nodes.size(); ++p)
        if (arena.plant_edges[p].empty())
            kill(Kind::Plant, static_cast<int>(p));

    while (!dead.empty()) {
        auto [kind, idx] = dead.front();
        dead.pop_front();
        switch (kind) {
        case Kind::Env:
            // the plant owns moves into this node; one dead successor kills
            for (int p : rev.env_preds[idx])
                kill(Kind::Plant, p);
            break;
        case Kind::Plant:
            for (int s : rev.plant_preds[idx])
                if (alive.sup[s] && --sup_alive_count[s] == 0)
                    kill(Kind::Sup, s);
            break;
        case Kind::Sup:
            // the environment picks the input; one dead option suffices
            for (int e : rev.sup_preds[idx])
                kill(Kind::Env, e);
            break;
        }
    }
    return alive;
}

/// Cooperative backward reachability to marked environment nodes inside the
/// alive region.
Sets reach_marked(const GameArena& arena, const ReverseEdges& rev,
                  const Sets& alive) {
    Sets reach;
    reach.env.assign(arena.env_nodes.size(), false);
    reach.sup.assign(arena.sup_nodes.size(), false);
    reach.plant.assign(arena.plant_nodes.size(), false);

    std::deque<std::pair<Kind, int>> frontier;
    auto mark = [&](Kind k, int idx) {
        if (!alive.of(k)[idx] || reach.of(k)[idx])
            return;
        reach.of(k)[idx] = true;
        frontier.push_back({k, idx});
    };

    for (size_t e = 0; e < arena.env_nodes.size(); ++e)
        if (alive.env[e] && arena.marked[e])
            mark(Kind::Env, static_cast<int>(e));

    while (!frontier.empty()) {
        auto [kind, idx] = frontier.front();
        frontier.pop_front();
        switch (kind) {
        case Kind::Env:
            for (int p : rev.env_preds[idx])
                mark(Kind::Plant, p);
            break;
        case Kind::Plant:
            for (int s : rev.plant_preds[idx])
                mark(Kind::Sup, s);
            break;
        case Kind::Sup:
            for (int e : rev.sup_preds[idx])
                mark(Kind::Env, e);
            break;
        }
    }
    return reach;
}

GameSolution to_solution(const GameArena& arena, Sets alive) {
    GameSolution solution;
    solution.winning_env = std::move(alive.env);
    solution.winning_sup = std::move(alive.sup);
    solution.winning_plant = std::move(alive.plant);
    solution.realizable = solution.winning_env[arena.initial_env];
    return solution;
}

} // namespace

GameSolution solve(const GameArena& arena) {
    ReverseEdges rev(arena);
    std::vector<bool> env_dead_seed = arena.losing;

    for (;;) {
        Sets alive = safe_region(arena, rev, env_dead_seed);
        Sets reach = reach_marked(arena, rev, alive);
        bool removed = false;
        for (size_t e = 0; e < arena.env_nodes.size(); ++e) {
            if (alive.env[e] && !reach.env[e]) {
                env_dead_seed[e] = true;
                removed = true;
            }
        }
        if (!removed)
            return to_solution(arena, std::move(alive));
    }
}

GameSolution brute_force_solve(const GameArena& arena) {
    if (arena.node_count() > kBruteForceNodeCap)
        throw LimitError("arena too large for the brute-force solver (" +
                         std::to_string(arena.node_count()) + " nodes)");

    Sets alive;
    alive.env.assign(arena.env_nodes.size(), true);
    alive.sup.assign(arena.sup_nodes.size(), true);
    alive.plant.assign(arena.plant_nodes.size(), true);
    for (size_t e = 0; e < arena.env_nodes.size(); ++e)
        if (arena.losing[e])
            alive.env[e] = false;
    for (size_t p = 0; p < arena.plant_nodes.size(); ++p)
        if (arena.plant_edges[p].empty())
            alive.plant[p] = false;

    // Whole-set re-evaluation until nothing changes: no worklists, no
    // counters; every round recomputes each node's condition from scratch.
    auto stabilize_safety = [&] {
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t e = 0; e < arena.env_nodes.size(); ++e) {
                if (!alive.env[e])
                    continue;
                for (const auto& [x, sup] : arena.env_edges[e])
                    if (!alive.sup[sup]) {
                        alive.env[e] = false;
                        changed = true;
                        break;
                    }
            }
            for (size_t s = 0; s < arena.sup_nodes.size(); ++s) {
                if (!alive.sup[s])
                    continue;
                bool any = false;
                for (const auto& [p, pnode] : arena.sup_edges[s])
                    if (alive.plant[pnode]) {
                        any = true;
                        break;
                    }
                if (!any) {
                    alive.sup[s] = false;
                    changed = true;
                }
            }
            for (size_t p = 0; p < arena.plant_nodes.size(); ++p) {
                if (!alive.plant[p])
                    continue;
                for (const auto& edge : arena.plant_edges[p])
                    if (!alive.env[edge.env]) {
                        alive.plant[p] = false;
                        changed = true;
                        break;
                    }
            }
        }
    };

    auto reach_by_rounds = [&] {
        Sets reach;
        reach.env.assign(arena.env_nodes.size(), false);
        reach.sup.assign(arena.sup_nodes.size(), false);
        reach.plant.assign(arena.plant_nodes.size(), false);
        for (size_t e = 0; e < arena.env_nodes.size(); ++e)
            reach.env[e] = alive.env[e] && arena.marked[e];
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t p = 0; p < arena.plant_nodes.size(); ++p) {
                if (!alive.plant[p] || reach.plant[p])
                    continue;
                for (const auto& edge : arena.plant_edges[p])
                    if (reach.env[edge.env]) {
                        reach.plant[p] = true;
                        changed = true;
                        break;
                    }
            }
            for (size_t s = 0; s < arena.sup_nodes.size(); ++s) {
                if (!alive.sup[s] || reach.sup[s])
                    continue;
                for (const auto& [pat, pnode] : arena.sup_edges[s])
                    if (reach.plant[pnode]) {
                        reach.sup[s] = true;
                        changed = true;
                        break;
                    }
            }
            for (size_t e = 0; e < arena.env_nodes.size(); ++e) {
                if (!alive.env[e] || reach.env[e])
                    continue;
                for (const auto& [x, sup] : arena.env_edges[e])
                    if (reach.sup[sup]) {
                        reach.env[e] = true;
                        changed = true;
                        break;
                    }
            }
        }
        return reach;
    };

    for (;;) {
        stabilize_safety();
        Sets reach = reach_by_rounds();
        bool removed = false;
        for (size_t e = 0; e < arena.env_nodes.size(); ++e) {
            if (alive.env[e] && !reach.env[e]) {
                alive.env[e] = false;
                removed = true;
            }
        }
        if (!removed)
            break;
    }

    return to_solution(arena, std::move(alive));
}

std::map<int, int> extract_strategy(const GameArena& arena,
                                    const GameSolution& solution) {
    if (!solution.realizable)
        throw ModelError("no winning strategy: the initial node is losing");
    std::map<int, int> strategy;
    for (size_t s = 0; s < arena.sup_nodes.size(); ++s) {
        if (!solution.winning_sup[s])
            continue;
        for (const auto& [pattern, pnode] : arena.sup_edges[s]) {
            if (solution.winning_plant[pnode]) {
                strategy[static_cast<int>(s)] = pattern;
                break;
            }
        }
    }
    return strategy;
}

} // namespace rdes
