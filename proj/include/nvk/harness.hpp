#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nvk/equivariant.hpp"
#include "nvk/graph.hpp"
#include "nvk/persistence.hpp"
#include "nvk/pop.hpp"

namespace nvk {

/// Step-1 genericity: all actions and action differences for phi and phi^2
/// are distinct modulo lambda0. Exact rational comparison; float-sourced
/// actions additionally get a tolerance scan (tau = 1e-9) and are flagged.
struct BackgroundReport {
    bool ok = true;
    bool float_flagged = false;
    std::vector<std::string> collisions;
};

BackgroundReport check_background_assumption(const FilteredComplex& c,
                                             const FilteredComplex& phi2_base);

/// The hat basis of Step 2: alpha^ = p(a x a), eta^ = h p(e x e) + p(e x g),
/// gamma^ = p(g x g), with d_eq alpha^ = 0 and d_eq eta^ = gamma^ verified.
struct HatBasis {
    std::vector<EqChain> alpha_hat;
    std::vector<std::pair<EqChain, EqChain>> pair_hat;  // (eta^, gamma^)
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

HatBasis hat_basis(const SingularDecomposition& decomp, const PairOfPantsMap& pop,
                   const EquivariantComplex& e);

/// The tilde family pi(hat basis) inside the h = 1 complex, checked against
/// the singular-decomposition definition (the Claim of Step 2).
struct ClaimReport {
    std::vector<ChainVector> alpha_tilde;
    std::vector<std::pair<ChainVector, ChainVector>> pair_tilde;
    std::vector<Rational> tilde_bars;  // sorted ascending
    bool identities_ok = true;         // d alpha~ = 0, d eta~ = gamma~
    bool orthogonal = true;
    bool basis_ok = true;              // cardinality = dim (2-perfect)
    bool bar_doubling_ok = true;       // tilde bars = 2 x original bars
    std::vector<std::string> failures;
    bool ok() const { return identities_ok && orthogonal && basis_ok && bar_doubling_ok; }
};

ClaimReport check_claim(const HatBasis& hat, const SingularDecomposition& decomp,
                        const H1Complex& h1);

struct MainTheoremReport {
    bool background_ok = false;
    bool stopped = false;          // background failed; nothing else checked
    bool no_arrow_case = false;    // vacuous: both graphs empty
    std::vector<Arrow> shortest_c;
    std::vector<Arrow> shortest_eq;
    bool correspondence_holds = false;
    Action beta_min_c;
    Action beta_min_eq;
    Action beta_min_phi2;      // plain beta_min of the base complex for phi^2
    Action beta_min_h1;        // beta_min of the h = 1 complex
    bool doubling_equality_ok = false;    // beta_eq = 2 beta_min(C)
    bool eq_below_plain_ok = false;       // beta_eq <= beta_min(phi^2)
    bool eq_below_h1_ok = false;          // beta_eq <= beta_min(C~)
    ClaimReport claim;
    std::vector<std::string> failures;

    bool ok() const {
        if (stopped) return false;
        if (no_arrow_case) return background_ok;
        return background_ok && correspondence_holds && doubling_equality_ok &&
               eq_below_plain_ok && eq_below_h1_ok && claim.ok();
    }
};

MainTheoremReport check_main_theorem(const Triple& triple);

/// Shifts every base action by an independent value in (-delta, delta); the
/// differential is untouched, so the arrow set is unchanged by construction.
FilteredComplex perturb_actions(const FilteredComplex& c, const Rational& delta,
                                std::uint64_t seed);

struct TowerLevel {
    int level = 0;
    Action beta_min_value;
    Rational expected;  // 2^level * beta_min(level 0)
    bool ok = true;     // beta_min(level) >= expected; equality in this model
    bool exact = true;
};

struct TowerReport {
    std::vector<TowerLevel> levels;
    std::optional<int> first_level_exceeding_cap;
    std::optional<Rational> cap;
    bool ok = true;
};

/// Iterated frobenius doubling: records beta_min per level and checks the
/// 2^k growth; with a cap B, identifies the first level with beta_min > B.
TowerReport doubling_tower(const FilteredComplex& c0, int levels,
                           std::optional<Rational> cap);

}  // namespace nvk
