#ifndef RDES_EVENTS_HPP_
#define RDES_EVENTS_HPP_

#include <compare>
#include <string>
#include <vector>

namespace rdes {

using Name = std::string;

/// An input or output event: either the silent event (written "eps") or a
/// non-empty set of alphabet symbols. The empty set is identified with the
/// silent event, so a default-constructed EventSet is silent.
///
/// Names are kept sorted and deduplicated; comparison is lexicographic over
/// the sorted name list, which puts the silent event first. This ordering is
/// the canonical one used everywhere enumeration order matters.
class EventSet {
public:
    EventSet() = default;
    explicit EventSet(std::vector<Name> names);

    static EventSet silent() { return EventSet{}; }
    static EventSet of(std::initializer_list<Name> names) {
        return EventSet(std::vector<Name>(names));
    }

    bool is_silent() const { return names_.empty(); }
    const std::vector<Name>& names() const { return names_; }
    bool contains(const Name& n) const;

    /// "eps" for silent, "{a,b}" otherwise.
    std::string to_string() const;

    auto operator<=>(const EventSet&) const = default;

private:
    std::vector<Name> names_;
};

using InputEvent = EventSet;
using OutputEvent = EventSet;

/// An internal plant event. The distinguished stutter event (empty name,
/// written "eps") is never user-declared; it is introduced by input
/// completion and belongs to every control pattern.
class InternalEvent {
public:
    InternalEvent() = default;
    explicit InternalEvent(Name name) : name_(std::move(name)) {}

    static InternalEvent stutter() { return InternalEvent{}; }

    bool is_stutter() const { return name_.empty(); }
    const Name& name() const { return name_; }

    std::string to_string() const { return name_.empty() ? "eps" : name_; }

    auto operator<=>(const InternalEvent&) const = default;

private:
    Name name_;
};

} // namespace rdes

#endif // RDES_EVENTS_HPP_
