#include "nvk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "nvk/generate.hpp"

namespace nvk {

namespace {

constexpr double kFloatTolerance = 1e-9;

struct ModValue {
    Rational value;
    std::string what;
};

// canonical representative of +-delta mod lambda0, so difference collisions
// are direction-independent
Rational difference_rep(const Rational& delta, const Rational& lambda0) {
    Rational a = delta.mod(lambda0);
    Rational b = (-delta).mod(lambda0);
    return a < b ? a : b;
}

}  // namespace

BackgroundReport check_background_assumption(const FilteredComplex& c,
                                             const FilteredComplex& phi2_base) {
    BackgroundReport report;
    const Rational lambda0 = c.params.lambda0;
    const bool from_float = c.actions_from_float || phi2_base.actions_from_float;

    std::vector<ModValue> actions;
    for (const auto& o : c.orbits) actions.push_back({o.action.mod(lambda0), "A(" + o.label + ")"});
    for (const auto& o : phi2_base.orbits)
        actions.push_back({o.action.mod(lambda0), "A(" + o.label + ")"});

    std::vector<ModValue> diffs;
    auto add_diffs = [&](const FilteredComplex& cx) {
        for (int i = 0; i < cx.orbit_count(); ++i)
            for (int j = i + 1; j < cx.orbit_count(); ++j) {
                Rational delta = cx.orbit(j).action - cx.orbit(i).action;
                diffs.push_back({difference_rep(delta, lambda0),
                                 "A(" + cx.orbit(j).label + ")-A(" + cx.orbit(i).label + ")"});
            }
    };
    add_diffs(c);
    add_diffs(phi2_base);

    auto scan = [&](std::vector<ModValue>& values, const char* kind) {
        std::sort(values.begin(), values.end(),
                  [](const ModValue& a, const ModValue& b) { return a.value < b.value; });
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            const auto& a = values[i];
            const auto& b = values[i + 1];
            bool collide = a.value == b.value;
            if (!collide && from_float) {
                double gap = std::abs(a.value.to_double() - b.value.to_double());
                if (gap < kFloatTolerance) {
                    collide = true;
                    report.float_flagged = true;
                }
            }
            if (collide) {
                report.ok = false;
                report.collisions.push_back(std::string(kind) + " collide mod lambda0: " + a.what +
                                            " vs " + b.what);
            }
        }
    };
    scan(actions, "actions");
    scan(diffs, "action differences");
    return report;
}

HatBasis hat_basis(const SingularDecomposition& decomp, const PairOfPantsMap& pop,
                   const EquivariantComplex& e) {
    HatBasis out;
    for (std::size_t i = 0; i < decomp.cycles.size(); ++i) {
        EqChain a = pop.apply_pair(decomp.cycles[i], decomp.cycles[i]);
        if (!e.apply_differential(a).is_zero())
            out.failures.push_back("d_eq(alpha^_" + std::to_string(i) + ") != 0");
        out.alpha_hat.push_back(std::move(a));
    }
    for (std::size_t j = 0; j < decomp.pairs.size(); ++j) {
        const auto& p = decomp.pairs[j];
        EqChain eta = pop.apply_pair(p.eta, p.eta).h_shifted(1) + pop.apply_pair(p.eta, p.gamma);
        EqChain gamma = pop.apply_pair(p.gamma, p.gamma);
        if (!(e.apply_differential(eta) == gamma))
            out.failures.push_back("d_eq(eta^_" + std::to_string(j) + ") != gamma^_" +
                                   std::to_string(j));
        out.pair_hat.push_back({std::move(eta), std::move(gamma)});
    }
    return out;
}

ClaimReport check_claim(const HatBasis& hat, const SingularDecomposition& decomp,
                        const H1Complex& h1) {
    ClaimReport out;
    const FilteredComplex& ct = h1.complex;

    for (const auto& a : hat.alpha_hat) out.alpha_tilde.push_back(evaluate_h1(a));
    for (const auto& [eta, gamma] : hat.pair_hat)
        out.pair_tilde.push_back({evaluate_h1(eta), evaluate_h1(gamma)});

    for (std::size_t i = 0; i < out.alpha_tilde.size(); ++i) {
        if (!ct.differential(out.alpha_tilde[i]).is_zero()) {
            out.identities_ok = false;
            out.failures.push_back("d~(alpha~_" + std::to_string(i) + ") != 0");
        }
    }
    for (std::size_t j = 0; j < out.pair_tilde.size(); ++j) {
        const auto& [eta, gamma] = out.pair_tilde[j];
        if (!(ct.differential(eta) == gamma)) {
            out.identities_ok = false;
            out.failures.push_back("d~(eta~_" + std::to_string(j) + ") != gamma~_" +
                                   std::to_string(j));
        }
    }

    std::vector<ChainVector> family = out.alpha_tilde;
    for (const auto& [eta, gamma] : out.pair_tilde) {
        family.push_back(eta);
        family.push_back(gamma);
    }
    for (const auto& v : family)
        if (v.is_zero()) {
            out.basis_ok = false;
            out.failures.push_back("tilde family contains the zero vector");
        }
    if (out.basis_ok) {
        out.orthogonal = is_orthogonal(family, ct);
        if (!out.orthogonal) out.failures.push_back("tilde family is not orthogonal");
    }
    // 2-perfect instances: cardinality equals the dimension, so orthogonality
    // (hence independence) makes the family a basis
    if (static_cast<int>(family.size()) != ct.orbit_count()) {
        out.basis_ok = false;
        out.failures.push_back("tilde family size " + std::to_string(family.size()) +
                               " != dim " + std::to_string(ct.orbit_count()));
    }

    // bar doubling, eq-for-eq: tilde bars = 2 x original bars as multisets
    std::vector<Rational> doubled;
    for (const auto& p : decomp.pairs) doubled.push_back(p.length * Rational(2));
    std::sort(doubled.begin(), doubled.end());
    for (const auto& [eta, gamma] : out.pair_tilde) {
        if (eta.is_zero() || gamma.is_zero()) continue;
        out.tilde_bars.push_back(ct.action_of_chain(gamma).value() -
                                 ct.action_of_chain(eta).value());
    }
    std::sort(out.tilde_bars.begin(), out.tilde_bars.end());
    if (out.tilde_bars != doubled) {
        out.bar_doubling_ok = false;
        out.failures.push_back("tilde bars are not exactly the doubled bars");
    }
    return out;
}

MainTheoremReport check_main_theorem(const Triple& triple) {
    MainTheoremReport report;
    auto background = check_background_assumption(triple.c, triple.e.base);
    report.background_ok = background.ok;
    if (!background.ok) {
        report.stopped = true;
        report.failures = background.collisions;
        report.failures.push_back("background assumption fails; stopping (Step 3 reduces the "
                                  "general case by perturbation)");
        return report;
    }

    FloerGraph gc = build_graph(triple.c);
    FloerGraph geq = build_equivariant_graph(triple.e);
    report.shortest_c = gc.shortest_arrows();
    report.shortest_eq = geq.shortest_arrows();

    if (gc.arrows.empty() && geq.arrows.empty()) {
        report.no_arrow_case = true;  // pseudo-rotation: the theorem is vacuous
        return report;
    }

    // Theorem: (x, y) carries a shortest arrow in Gamma(phi) iff (x^2, y^2)
    // carries one in Gamma_eq(phi^2); checked as a set bijection under
    // squaring, with recaps doubling.
    std::set<std::tuple<int, int, std::int64_t>> image;
    for (const auto& a : report.shortest_c)
        image.insert({triple.pop.squaring[static_cast<std::size_t>(a.source)],
                      triple.pop.squaring[static_cast<std::size_t>(a.target)], 2 * a.recap});
    std::set<std::tuple<int, int, std::int64_t>> eq_set;
    for (const auto& a : report.shortest_eq) eq_set.insert({a.source, a.target, a.recap});
    report.correspondence_holds = image == eq_set;
    if (!report.correspondence_holds)
        report.failures.push_back("shortest arrows do not correspond under squaring");

    report.beta_min_c = beta_min(triple.c);
    report.beta_min_eq = report.shortest_eq.empty() ? Action::infinity()
                                                    : Action(report.shortest_eq.front().length);
    report.beta_min_phi2 = beta_min_entry_oracle(triple.e.base);
    H1Complex h1 = evaluate_h1(triple.e);
    report.beta_min_h1 = beta_min(h1.complex);

    if (!report.beta_min_c.is_infinite()) {
        Action twice{report.beta_min_c.value() * Rational(2)};
        report.doubling_equality_ok = report.beta_min_eq == twice;
        if (!report.doubling_equality_ok)
            report.failures.push_back("beta_min^eq != 2 beta_min: " + report.beta_min_eq.str() +
                                      " vs 2*" + report.beta_min_c.str());
    }
    report.eq_below_plain_ok = report.beta_min_eq <= report.beta_min_phi2;
    if (!report.eq_below_plain_ok)
        report.failures.push_back("beta_min^eq exceeds beta_min(phi^2)");
    report.eq_below_h1_ok = report.beta_min_eq <= report.beta_min_h1;
    if (!report.eq_below_h1_ok)
        report.failures.push_back("beta_min^eq exceeds beta_min of the h=1 complex");

    auto decomp = singular_decomposition(triple.c);
    auto hat = hat_basis(decomp, triple.pop, triple.e);
    for (const auto& f : hat.failures) report.failures.push_back(f);
    report.claim = check_claim(hat, decomp, h1);
    if (!hat.ok()) report.claim.identities_ok = false;
    for (const auto& f : report.claim.failures) report.failures.push_back(f);
    return report;
}

FilteredComplex perturb_actions(const FilteredComplex& c, const Rational& delta,
                                std::uint64_t seed) {
    if (delta.sign() < 0) throw std::invalid_argument("perturb_actions: delta >= 0");
    FilteredComplex out = c;
    if (delta.is_zero()) return out;
    Rng rng(seed);
    const std::int64_t M = 1 << 20;
    for (auto& o : out.orbits) {
        // uniform in the open interval (-delta, delta)
        std::int64_t k = rng.range(-(M - 1), M - 1);
        o.action += delta * Rational(k, M);
    }
    return out;
}

TowerReport doubling_tower(const FilteredComplex& c0, int levels, std::optional<Rational> cap) {
    if (levels < 0) throw std::invalid_argument("doubling_tower: levels >= 0");
    TowerReport report;
    report.cap = cap;
    FilteredComplex current = c0;
    Action base = beta_min(c0);
    Rational pow2{1};
    for (int level = 0; level <= levels; ++level) {
        TowerLevel row;
        row.level = level;
        row.beta_min_value = level == 0 ? base : beta_min(current);
        if (base.is_infinite()) {
            row.ok = row.beta_min_value.is_infinite();
            row.exact = row.ok;
        } else {
            row.expected = base.value() * pow2;
            row.ok = !(row.beta_min_value < Action(row.expected));
            row.exact = row.beta_min_value == Action(row.expected);
        }
        if (!row.ok) report.ok = false;
        if (cap && !row.beta_min_value.is_infinite() && !report.first_level_exceeding_cap &&
            Action(*cap) < row.beta_min_value)
            report.first_level_exceeding_cap = level;
        report.levels.push_back(row);
        if (level < levels) {
            current = current.frobenius_double();
            pow2 = pow2 * Rational(2);
        }
    }
    return report;
}

}  // namespace nvk
