#include "rdes/events.hpp"

#include <algorithm>
#include <sstream>

namespace rdes {

EventSet::EventSet(std::vector<Name> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

bool EventSet::contains(const Name& n) const {
    return std::binary_search(names_.begin(), names_.end(), n);
}

std::string EventSet::to_string() const {
    if (names_.empty())
        return "eps";
    std::ostringstream out;
    out << '{';
    for (size_t i = 0; i < names_.size(); ++i) {
        if (i > 0)
            out << ',';
        out << names_[i];
    }
    out << '}';
    return out.str();
}

} // namespace rdes
