#ifndef RDES_SOLVER_HPP_
#define RDES_SOLVER_HPP_

#include <map>
#include <vector>

#include "rdes/arena.hpp"

namespace rdes {

inline constexpr std::size_t kBruteForceNodeCap = 5000;

/// Winning-and-live node sets per node kind, plus the positional strategy on
/// winning supervisor nodes (the largest safe pattern; safe patterns at a
/// node are closed under union, so the largest one is unique and preserves
/// every liveness path).
struct GameSolution {
    std::vector<bool> winning_env;
    std::vector<bool> winning_sup;
    std::vector<bool> winning_plant;
    bool realizable = false;

    bool operator==(const GameSolution&) const = default;
};

/// Fixpoint solver. Safety is the classical two-player attractor with the
/// environment and the plant as one coalition; liveness removes environment
/// nodes that cannot reach a marked node inside the winning region, and the
/// two prunings alternate until stable. A plant node whose pattern enables
/// no executable event is losing.
GameSolution solve(const GameArena& arena);

/// Independent oracle: the same solution computed by whole-set
/// re-evaluation rounds instead of worklist propagation. Exact on finite
/// arenas; capped at kBruteForceNodeCap nodes.
GameSolution brute_force_solve(const GameArena& arena);

/// Positional strategy on winning supervisor nodes: the first pattern in
/// canonical order whose plant node is winning. Requires a realizable
/// solution.
std::map<int, int> extract_strategy(const GameArena& arena,
                                    const GameSolution& solution);

} // namespace rdes

#endif // RDES_SOLVER_HPP_
