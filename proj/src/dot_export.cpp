#include "rdes/dot_export.hpp"

#include <sstream>

namespace rdes {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string export_dot(const GameArena& arena, const GameSolution* solution,
                       const std::map<int, int>* strategy) {
    std::ostringstream out;
    out << "digraph arena {\n";
    out << "  rankdir=TB;\n";

    for (size_t e = 0; e < arena.env_nodes.size(); ++e) {
        out << "  e" << e << " [shape=" << (arena.marked[e] ? "doublecircle" : "circle")
            << ", label=\"" << escape(arena.env_label(static_cast<int>(e))) << "\"";
        std::string style;
        if (arena.losing[e])
            style = "filled";
        if (solution && !solution->winning_env[e])
            style += style.empty() ? "dashed" : ",dashed";
        if (!style.empty())
            out << ", style=\"" << style << "\"";
        if (arena.losing[e])
            out << ", fillcolor=red";
        out << "];\n";
    }
    for (size_t s = 0; s < arena.sup_nodes.size(); ++s) {
        const auto& node = arena.sup_nodes[s];
        out << "  s" << s << " [shape=box, label=\""
            << escape(arena.env_label(node.env) + "|" + node.input.to_string())
            << "\"";
        if (solution && !solution->winning_sup[s])
            out << ", style=dashed";
        out << "];\n";
    }
    for (size_t p = 0; p < arena.plant_nodes.size(); ++p) {
        const auto& node = arena.plant_nodes[p];
        const auto& sup = arena.sup_nodes[node.sup];
        out << "  p" << p << " [shape=diamond, label=\""
            << escape(arena.env_label(sup.env) + "|" + sup.input.to_string() +
                      "|" + arena.patterns[node.pattern].to_string())
            << "\"";
        if (solution && !solution->winning_plant[p])
            out << ", style=dashed";
        out << "];\n";
    }

    for (size_t e = 0; e < arena.env_edges.size(); ++e)
        for (const auto& [input, sup] : arena.env_edges[e])
            out << "  e" << e << " -> s" << sup << " [label=\""
                << escape(input.to_string()) << "\"];\n";
    for (size_t s = 0; s < arena.sup_edges.size(); ++s) {
        for (const auto& [pattern, pnode] : arena.sup_edges[s]) {
            bool chosen = strategy && strategy->count(static_cast<int>(s)) > 0 &&
                          strategy->at(static_cast<int>(s)) == pattern;
            out << "  s" << s << " -> p" << pnode << " [label=\""
                << escape(arena.patterns[pattern].to_string()) << "\"";
            if (chosen)
                out << ", penwidth=2, style=bold";
            out << "];\n";
        }
    }
    for (size_t p = 0; p < arena.plant_edges.size(); ++p)
        for (const auto& edge : arena.plant_edges[p])
            out << "  p" << p << " -> e" << edge.env << " [label=\""
                << escape(edge.event.to_string()) << "\"];\n";

    out << "}\n";
    return out.str();
}

} // namespace rdes
