#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nvk/complex.hpp"

namespace nvk {

struct EquivariantComplex;

/// One arrow of a (reduced) Floer graph. The unreduced graph is the free
/// Z-orbit of these under simultaneous recapping, which preserves lengths;
/// `recap` is the target recapping relative to an uncapped source.
struct Arrow {
    int source = 0;
    int target = 0;
    std::int64_t recap = 0;
    Rational length;
    std::optional<int> h_power;  // set on equivariant graphs

    bool operator==(const Arrow&) const = default;
};

/// Reduced Floer graph: vertices are orbit classes, one arrow per
/// capped-level nonzero differential coefficient.
struct FloerGraph {
    std::vector<std::string> vertices;  // orbit labels
    std::vector<Arrow> arrows;          // sorted by (source, target, recap)
    bool equivariant = false;

    /// all arrows of minimal length, deterministic order; empty when the
    /// graph has no arrows (beta_min = +infinity upstream)
    std::vector<Arrow> shortest_arrows() const;
};

/// Arrow of the unreduced graph on capped generators. The Z-action by
/// simultaneous recapping is free and preserves lengths, so these are a lazy
/// view: reduced arrow plus an offset.
struct CappedArrow {
    CappedGenerator source;
    CappedGenerator target;
    Rational length;
    std::optional<int> h_power;
};

CappedArrow unreduced_arrow(const Arrow& arrow, std::int64_t offset);

FloerGraph build_graph(const FilteredComplex& complex);
FloerGraph build_equivariant_graph(const EquivariantComplex& eq);

std::string export_dot(const FloerGraph& graph);

}  // namespace nvk
