#ifndef RDES_PATTERNS_HPP_
#define RDES_PATTERNS_HPP_

#include <string>
#include <vector>

#include "rdes/events.hpp"
#include "rdes/plant.hpp"

namespace rdes {

/// Cap on the number of controllable events when enumerating patterns.
inline constexpr int kMaxControllableEvents = 16;

/// A control pattern: the set of internal events the supervisor enables.
/// Every pattern contains all uncontrollable events; the stutter event is a
/// member of every pattern implicitly.
class ControlPattern {
public:
    ControlPattern() = default;
    explicit ControlPattern(std::vector<Name> enabled);

    bool allows(const InternalEvent& e) const;
    const std::vector<Name>& enabled() const { return enabled_; }

    /// "{s1,su}" with names in ascending order; "{}" for the empty pattern.
    std::string to_string() const;

    auto operator<=>(const ControlPattern&) const = default;

private:
    std::vector<Name> enabled_;
};

/// All control patterns for the plant's partition, ordered by descending
/// size and then by canonical name order. Throws LimitError when the
/// controllable event count exceeds kMaxControllableEvents.
std::vector<ControlPattern> control_patterns(const OpenDes& plant);

} // namespace rdes

#endif // RDES_PATTERNS_HPP_
