#include "rdes/words.hpp"

#include <sstream>

namespace rdes {

IoWord project_xy(const ExtendedWord& w) {
    IoWord out;
    out.reserve(w.size());
    for (const auto& s : w)
        out.push_back({s.input, s.output});
    return out;
}

XpWord project_xp(const ExtendedWord& w) {
    XpWord out;
    out.reserve(w.size());
    for (const auto& s : w)
        out.push_back({s.input, s.event});
    return out;
}

std::vector<InputEvent> project_x(const ExtendedWord& w) {
    std::vector<InputEvent> out;
    for (const auto& s : w)
        if (!s.input.is_silent())
            out.push_back(s.input);
    return out;
}

std::vector<OutputEvent> project_y(const ExtendedWord& w) {
    std::vector<OutputEvent> out;
    for (const auto& s : w)
        if (!s.output.is_silent())
            out.push_back(s.output);
    return out;
}

std::vector<InternalEvent> project_p(const ExtendedWord& w) {
    std::vector<InternalEvent> out;
    for (const auto& s : w)
        if (!s.event.is_stutter())
            out.push_back(s.event);
    return out;
}

namespace {

template <typename Word, typename StepPrinter>
std::string join_steps(const Word& w, StepPrinter print_step) {
    if (w.empty())
        return "()";
    std::ostringstream out;
    for (const auto& s : w) {
        out << '(';
        print_step(out, s);
        out << ')';
    }
    return out.str();
}

} // namespace

std::string to_string(const ExtendedWord& w) {
    return join_steps(w, [](std::ostream& out, const ExtStep& s) {
        out << s.input.to_string() << '|' << s.event.to_string() << '|'
            << s.output.to_string();
    });
}

std::string to_string(const IoWord& w) {
    return join_steps(w, [](std::ostream& out, const IoStep& s) {
        out << s.input.to_string() << '|' << s.output.to_string();
    });
}

std::string to_string(const XpWord& w) {
    return join_steps(w, [](std::ostream& out, const XpStep& s) {
        out << s.input.to_string() << '|' << s.event.to_string();
    });
}

std::string to_string(const std::vector<EventSet>& w) {
    return join_steps(w, [](std::ostream& out, const EventSet& s) {
        out << s.to_string();
    });
}

std::string to_string(const std::vector<InternalEvent>& w) {
    return join_steps(w, [](std::ostream& out, const InternalEvent& s) {
        out << s.to_string();
    });
}

} // namespace rdes
