#include "nvk/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nvk/equivariant.hpp"

namespace nvk {

namespace {

void sort_arrows(std::vector<Arrow>& arrows) {
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.target != b.target) return a.target < b.target;
        return a.recap < b.recap;
    });
}

Rational arrow_length(const FilteredComplex& C, int from, int to, std::int64_t recap) {
    return C.action_of({to, recap}) - C.orbit(from).action;
}

}  // namespace

FloerGraph build_graph(const FilteredComplex& C) {
    FloerGraph g;
    for (const auto& o : C.orbits) g.vertices.push_back(o.label);
    for (const auto& [key, value] : C.entries()) {
        auto [from, to] = key;
        for (std::int64_t j : value.laurent_support()) {
            Arrow a;
            a.source = from;
            a.target = to;
            a.recap = j;
            a.length = arrow_length(C, from, to, j);
            if (a.length.sign() <= 0 && C.strict_action)
                throw std::domain_error("build_graph: non-positive arrow length");
            g.arrows.push_back(std::move(a));
        }
    }
    sort_arrows(g.arrows);
    return g;
}

FloerGraph build_equivariant_graph(const EquivariantComplex& eq) {
    FloerGraph g = build_graph(eq.base);
    g.equivariant = true;
    for (auto& a : g.arrows) a.h_power = 0;
    for (int k = 1; k <= eq.correction_order(); ++k) {
        for (const auto& [ft, value] : eq.correction(k).entries()) {
            auto [from, to] = ft;
            for (std::int64_t j : value.laurent_support()) {
                Arrow a;
                a.source = from;
                a.target = to;
                a.recap = j;
                a.length = arrow_length(eq.base, from, to, j);
                a.h_power = k;
                g.arrows.push_back(std::move(a));
            }
        }
    }
    sort_arrows(g.arrows);
    return g;
}

std::vector<Arrow> FloerGraph::shortest_arrows() const {
    std::vector<Arrow> out;
    bool have = false;
    Rational best;
    for (const auto& a : arrows) {
        if (!have || a.length < best) {
            best = a.length;
            have = true;
        }
    }
    if (!have) return out;
    for (const auto& a : arrows)
        if (a.length == best) out.push_back(a);
    return out;  // inherits the deterministic arrow order
}

CappedArrow unreduced_arrow(const Arrow& arrow, std::int64_t offset) {
    CappedArrow out;
    out.source = {arrow.source, offset};
    out.target = {arrow.target, arrow.recap + offset};
    out.length = arrow.length;
    out.h_power = arrow.h_power;
    return out;
}

std::string export_dot(const FloerGraph& g) {
    std::ostringstream os;
    os << "digraph floer {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        os << "  \"" << g.vertices[i] << "\";\n";
    for (const auto& a : g.arrows) {
        os << "  \"" << g.vertices[static_cast<std::size_t>(a.source)] << "\" -> \""
           << g.vertices[static_cast<std::size_t>(a.target)] << "\" [label=\"" << a.length.decimal_str();
        if (a.recap != 0) os << " (q^" << a.recap << ")";
        if (a.h_power && *a.h_power > 0) os << " h^" << *a.h_power;
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace nvk
