#include "rdes/patterns.hpp"

#include <algorithm>
#include <sstream>

#include "rdes/errors.hpp"

namespace rdes {

ControlPattern::ControlPattern(std::vector<Name> enabled)
    : enabled_(std::move(enabled)) {
    std::sort(enabled_.begin(), enabled_.end());
    enabled_.erase(std::unique(enabled_.begin(), enabled_.end()),
                   enabled_.end());
}

bool ControlPattern::allows(const InternalEvent& e) const {
    if (e.is_stutter())
        return true;
    return std::binary_search(enabled_.begin(), enabled_.end(), e.name());
}

std::string ControlPattern::to_string() const {
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < enabled_.size(); ++i) {
        if (i > 0)
            out << ',';
        out << enabled_[i];
    }
    out << '}';
    return out.str();
}

std::vector<ControlPattern> control_patterns(const OpenDes& plant) {
    std::vector<Name> controllable(plant.controllable.begin(),
                                   plant.controllable.end());
    if (controllable.size() > kMaxControllableEvents)
        throw LimitError(
            "too many controllable events (" +
            std::to_string(controllable.size()) + " > " +
            std::to_string(kMaxControllableEvents) +
            "); group events or reduce the controllable alphabet");

    std::vector<Name> base(plant.uncontrollable.begin(),
                           plant.uncontrollable.end());
    std::vector<ControlPattern> patterns;
    const size_t n = controllable.size();
    for (size_t bits = 0; bits < (size_t{1} << n); ++bits) {
        std::vector<Name> enabled = base;
        for (size_t i = 0; i < n; ++i)
            if (bits & (size_t{1} << i))
                enabled.push_back(controllable[i]);
        patterns.emplace_back(std::move(enabled));
    }
    std::sort(patterns.begin(), patterns.end(),
              [](const ControlPattern& a, const ControlPattern& b) {
                  if (a.enabled().size() != b.enabled().size())
                      return a.enabled().size() > b.enabled().size();
                  return a.enabled() < b.enabled();
              });
    return patterns;
}

} // namespace rdes
