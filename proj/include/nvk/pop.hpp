#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nvk/equivariant.hpp"

namespace nvk {

/// The equivariant pair-of-pants map as data: values on ordered orbit pairs
/// of CF(phi), landing in CF(phi^2)[h], extended bilinearly over Lambda[h]
/// by the recapping rule p(q^a x, q^b y) = q^(a+b) p(x, y).
class PairOfPantsMap {
public:
    std::vector<int> squaring;  // orbit id of C -> orbit id of E.base

    const EqChain& value(int x, int y) const;
    void set_value(int x, int y, EqChain chain);
    const std::map<std::pair<int, int>, EqChain>& values() const { return values_; }

    /// p(xi tensor zeta) for chains, bilinear over Lambda
    EqChain apply_pair(const ChainVector& xi, const ChainVector& zeta) const;

    /// p applied to a group cochain element (h-powers pass through)
    EqChain apply(const GroupCochainComplex::Element& e) const;

private:
    std::map<std::pair<int, int>, EqChain> values_;
};

struct AxiomCheck {
    bool pass = true;
    bool skipped = false;
    std::vector<std::string> failures;
};

struct AxiomReport {
    AxiomCheck chain_map;
    AxiomCheck filtration;
    AxiomCheck seidel;
    AxiomCheck h0;

    bool all_pass() const {
        return chain_map.pass && filtration.pass && seidel.pass && (h0.skipped || h0.pass);
    }
};

/// p composed with d_Z2 equals d_eq composed with p, on every basis pair.
AxiomCheck check_chain_map(const PairOfPantsMap& pop, const FilteredComplex& c,
                           const EquivariantComplex& e);

/// A(p(x tensor y)) >= A(x) + A(y) for every ordered pair.
AxiomCheck check_filtration(const PairOfPantsMap& pop, const FilteredComplex& c,
                            const EquivariantComplex& e);

/// Seidel non-vanishing: p(x tensor x) = h^m x^2 + terms of action > 2A(x),
/// with m = 2 mu(x) - mu(x^2) + n.
AxiomCheck check_seidel(const PairOfPantsMap& pop, const FilteredComplex& c,
                        const EquivariantComplex& e);

/// Optional table of the classical pair-of-pants product; when present the
/// h^0 part of p must match it, otherwise the check reports skipped.
using ClassicalProductTable = std::map<std::pair<int, int>, ChainVector>;
AxiomCheck check_h0_reduction(const PairOfPantsMap& pop,
                              const std::optional<ClassicalProductTable>& table);

AxiomReport check_all(const PairOfPantsMap& pop, const FilteredComplex& c,
                      const EquivariantComplex& e,
                      const std::optional<ClassicalProductTable>& table = std::nullopt);

/// Raised when the synthetic chain-map solve has no solution for the
/// requested spec; callers retry with a fresh seed or fall back to the
/// pseudo-rotation model.
struct UnsatisfiableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SyntheticModel { PseudoRotation, FrobeniusDouble };

struct GeneratorSpec {
    SyntheticModel model = SyntheticModel::FrobeniusDouble;
    int orbit_count = 4;
    std::vector<Rational> bar_lengths;  // planted finite bars; empty = derived from orbit count
    std::uint64_t seed = 0;
    bool require_background = false;  // resample actions until the background assumption holds
};

struct Triple {
    FilteredComplex c;
    EquivariantComplex e;
    PairOfPantsMap pop;
};

/// Generates a consistent (CF(phi), CF_eq(phi^2), p) triple with phi
/// 2-perfect. The four axiom checks gate the output.
Triple generate_synthetic(const GeneratorSpec& spec);

}  // namespace nvk
