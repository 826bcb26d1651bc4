// export.hpp -- DOT rendering of graphs and decomposition layers, plain-text
// statevector dumps, and the JSON verification report shape.

#pragma once

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "toricgraph/standard_form.hpp"
#include "toricgraph/statevec.hpp"

namespace toricgraph {

inline std::string graph_to_dot(const Graph &g, const std::string &name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 1; v <= g.n(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

// One DOT file for the whole toric graph, edges colored by decomposition
// layer: star components red, first half layer blue, second half layer green.
inline std::string decomposition_to_dot(const ToricDecomposition &d,
                                        const std::string &name = "toric") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 1; v <= d.mstar.n(); ++v) os << "  " << v << ";\n";
    const std::pair<const Graph *, const char *> layers[] = {
        {&d.mstar, "red"}, {&d.mhalf1, "blue"}, {&d.mhalf2, "green"}};
    for (auto [g, color] : layers)
        for (auto [u, v] : g->edges())
            os << "  " << u << " -- " << v << " [color=" << color << "];\n";
    os << "}\n";
    return os.str();
}

// "index re im" per line, fixed precision, for golden files.
inline std::string statevec_dump_text(const StateVec &s) {
    std::ostringstream os;
    os << std::setprecision(15);
    for (std::size_t i = 0; i < s.dim(); ++i)
        os << i << " " << s[i].real() << " " << s[i].imag() << "\n";
    return os.str();
}

inline nlohmann::json report_entry(const std::string &check, bool ok,
                                   const std::string &witness = "") {
    nlohmann::json j{{"check", check}, {"status", ok ? "pass" : "fail"}};
    if (!witness.empty()) j["witness"] = witness;
    return j;
}

}  // namespace toricgraph
