#ifndef RDES_DOT_EXPORT_HPP_
#define RDES_DOT_EXPORT_HPP_

#include <map>
#include <string>

#include "rdes/arena.hpp"
#include "rdes/solver.hpp"

namespace rdes {

/// DOT rendering of the arena: environment nodes as circles (marked ones
/// double-circled, losing ones filled red), supervisor nodes as boxes, plant
/// nodes as diamonds. With a solution, non-winning nodes are dashed and the
/// strategy's pattern edges are drawn bold. Node names follow construction
/// order, so output is deterministic.
std::string export_dot(const GameArena& arena,
                       const GameSolution* solution = nullptr,
                       const std::map<int, int>* strategy = nullptr);

} // namespace rdes

#endif // RDES_DOT_EXPORT_HPP_
