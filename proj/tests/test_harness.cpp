#include <doctest.h>

#include "nvk/generate.hpp"
#include "nvk/harness.hpp"

using namespace nvk;

namespace {

FilteredComplex four_orbit() {
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.orbits = {{"a", Rational(0), 0},
                {"b", Rational(1, 5), 0},
                {"c", Rational(1), 1},
                {"d", Rational(13, 10), 1}};
    c.rebuild_index();
    c.set_entry(0, 2, NovikovScalar::one());
    c.set_entry(0, 3, NovikovScalar::one());
    c.set_entry(1, 3, NovikovScalar::one());
    return c;
}

FilteredComplex empty_phi2() {
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.rebuild_index();
    return c;
}

}  // namespace

TEST_CASE("background assumption examples") {
    auto c = four_orbit();
    CHECK(check_background_assumption(c, empty_phi2()).ok);

    auto dup = c;
    dup.orbits[1].action = Rational(0);  // two equal actions
    CHECK_FALSE(check_background_assumption(dup, empty_phi2()).ok);

    // differences 0.4 and 10.4 coincide mod lambda0 = 10
    auto diff = c;
    diff.orbits = {{"a", Rational(0), 0},
                   {"b", Rational(2, 5), 0},
                   {"c", Rational(3), 1},
                   {"d", Rational(67, 5), 1}};  // 13.4 - 3 = 10.4
    diff.rebuild_index();
    CHECK_FALSE(check_background_assumption(diff, empty_phi2()).ok);
}

TEST_CASE("hat and tilde bases on a frobenius triple") {
    GeneratorSpec spec;
    spec.orbit_count = 4;
    spec.seed = 21;
    spec.require_background = true;
    auto t = generate_synthetic(spec);

    auto decomp = singular_decomposition(t.c);
    auto hat = hat_basis(decomp, t.pop, t.e);
    CHECK(hat.ok());

    auto h1 = evaluate_h1(t.e);
    auto claim = check_claim(hat, decomp, h1);
    CHECK(claim.identities_ok);
    CHECK(claim.orthogonal);
    CHECK(claim.basis_ok);
    CHECK(claim.bar_doubling_ok);

    // bar lengths double exactly
    REQUIRE(claim.tilde_bars.size() == decomp.pairs.size());
    for (std::size_t j = 0; j < decomp.pairs.size(); ++j)
        CHECK(claim.tilde_bars[j] == decomp.pairs[j].length * Rational(2));
}

TEST_CASE("hat basis flags a corrupted map") {
    GeneratorSpec spec;
    spec.orbit_count = 4;
    spec.seed = 33;
    auto t = generate_synthetic(spec);
    auto decomp = singular_decomposition(t.c);
    REQUIRE(hat_basis(decomp, t.pop, t.e).ok());

    PairOfPantsMap bad = t.pop;
    int gamma_orbit = -1;  // an orbit whose square is closed but nonzero somewhere
    for (int i = 0; i < t.c.orbit_count(); ++i)
        if (!t.c.row(i).empty()) { gamma_orbit = t.c.row(i).begin()->first; break; }
    REQUIRE(gamma_orbit >= 0);
    EqChain v = bad.value(gamma_orbit, gamma_orbit);
    // corrupt the Seidel coefficient of gamma x gamma: gamma^ changes, eta^ does not
    bad.set_value(gamma_orbit, gamma_orbit, v.h_shifted(1));
    auto hat = hat_basis(decomp, bad, t.e);
    CHECK_FALSE(hat.ok());
}

TEST_CASE("main theorem replay on frobenius triples") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GeneratorSpec spec;
        spec.orbit_count = 4 + static_cast<int>(seed % 3);
        spec.seed = 101 + seed;
        spec.require_background = true;
        auto t = generate_synthetic(spec);
        auto report = check_main_theorem(t);
        CHECK(report.background_ok);
        CHECK_FALSE(report.stopped);
        if (report.no_arrow_case) continue;
        CHECK(report.correspondence_holds);
        CHECK(report.doubling_equality_ok);
        CHECK(report.eq_below_plain_ok);
        CHECK(report.eq_below_h1_ok);
        CHECK(report.claim.ok());
        CHECK(report.ok());
    }
}

TEST_CASE("pseudo-rotation replay is vacuous") {
    GeneratorSpec spec;
    spec.model = SyntheticModel::PseudoRotation;
    spec.orbit_count = 3;
    spec.seed = 17;
    spec.require_background = true;
    auto t = generate_synthetic(spec);
    auto report = check_main_theorem(t);
    CHECK(report.background_ok);
    CHECK(report.no_arrow_case);
    CHECK(report.ok());
}

TEST_CASE("background violation stops the replay") {
    GeneratorSpec spec;
    spec.orbit_count = 4;
    spec.seed = 5;
    auto t = generate_synthetic(spec);
    t.c.orbits[0].action = t.c.orbits[1].action;  // force a collision
    auto report = check_main_theorem(t);
    CHECK(report.stopped);
    CHECK_FALSE(report.ok());
}

TEST_CASE("perturbation: identity at delta = 0, stability for small delta") {
    auto c = four_orbit();
    auto same = perturb_actions(c, Rational(0), 7);
    for (int i = 0; i < c.orbit_count(); ++i)
        CHECK(same.orbit(i).action == c.orbit(i).action);

    // gap between shortest (1.0) and second (1.1) is 0.1; delta < 1/40 keeps
    // the shortest-arrow set fixed
    auto g0 = build_graph(c).shortest_arrows();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto p = perturb_actions(c, Rational(1, 50), seed);
        for (int i = 0; i < c.orbit_count(); ++i) {
            Rational d = p.orbit(i).action - c.orbit(i).action;
            if (d.sign() < 0) d = -d;
            CHECK(d < Rational(1, 50));
        }
        auto g1 = build_graph(p).shortest_arrows();
        REQUIRE(g1.size() == g0.size());
        CHECK(g1.front().source == g0.front().source);
        CHECK(g1.front().target == g0.front().target);
    }
}

TEST_CASE("perturbation can restore the background assumption") {
    auto c = four_orbit();
    c.orbits[1].action = Rational(0);  // degenerate: equal actions
    auto dbl = c.frobenius_double();
    REQUIRE_FALSE(check_background_assumption(c, dbl).ok);
    bool restored = false;
    for (std::uint64_t seed = 0; seed < 100 && !restored; ++seed) {
        auto p = perturb_actions(c, Rational(1, 100), seed);
        restored = check_background_assumption(p, p.frobenius_double()).ok;
    }
    CHECK(restored);
}

TEST_CASE("doubling tower grows beta_min by powers of two") {
    auto c = four_orbit();
    auto report = doubling_tower(c, 3, std::nullopt);
    REQUIRE(report.levels.size() == 4);
    CHECK(report.ok);
    std::vector<Rational> expect = {Rational(1), Rational(2), Rational(4), Rational(8)};
    for (int j = 0; j < 4; ++j) {
        CHECK(report.levels[static_cast<std::size_t>(j)].beta_min_value ==
              Action(expect[static_cast<std::size_t>(j)]));
        CHECK(report.levels[static_cast<std::size_t>(j)].exact);
    }

    auto single = doubling_tower(c, 0, std::nullopt);
    CHECK(single.levels.size() == 1);
    CHECK(single.ok);

    auto capped = doubling_tower(c, 5, Rational(10));
    REQUIRE(capped.first_level_exceeding_cap.has_value());
    CHECK(*capped.first_level_exceeding_cap == 4);  // 16 > 10 at level 4
}
