#include <doctest.h>

#include "nvk/persistence.hpp"

using namespace nvk;

namespace {

// the running 4-orbit example: a(0)->c(1.0)+d(1.3), b(0.2)->d(1.3)
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

FilteredComplex zero_complex(int orbit_count) {
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    for (int i = 0; i < orbit_count; ++i)
        c.orbits.push_back({"z" + std::to_string(i), Rational(i, 7), 0});
    c.rebuild_index();
    return c;
}

}  // namespace

TEST_CASE("four-orbit barcode: bars 1.0 and 1.1") {
    auto c = four_orbit();
    REQUIRE(c.validate().valid());
    auto bc = barcode(c);
    REQUIRE(bc.finite_bars.size() == 2);
    CHECK(bc.finite_bars[0] == Rational(1));
    CHECK(bc.finite_bars[1] == Rational(11, 10));
    CHECK(bc.infinite_bar_count == 0);
    CHECK(bc.beta_min() == Action(Rational(1)));
    CHECK(bc.beta() == Rational(11, 10));
    CHECK(beta_min_entry_oracle(c) == Action(Rational(1)));
}

TEST_CASE("four-orbit decomposition satisfies the definition") {
    auto c = four_orbit();
    auto d = singular_decomposition(c);
    REQUIRE(d.pairs.size() == 2);
    CHECK(d.cycles.empty());
    std::vector<ChainVector> all;
    for (const auto& p : d.pairs) {
        CHECK(c.differential(p.eta) == p.gamma);
        CHECK(c.differential(p.gamma).is_zero());
        all.push_back(p.eta);
        all.push_back(p.gamma);
    }
    CHECK(is_orthogonal(all, c));
    CHECK(is_orthogonal_window_oracle(all, c));
    CHECK(d.pairs[0].length == Rational(1));
    CHECK(d.pairs[1].length == Rational(11, 10));
}

TEST_CASE("zero differential: only infinite bars") {
    auto c = zero_complex(3);
    auto d = singular_decomposition(c);
    CHECK(d.pairs.empty());
    CHECK(d.cycles.size() == 3);
    auto bc = barcode(c);
    CHECK(bc.finite_bars.empty());
    CHECK(bc.infinite_bar_count == 3);
    CHECK(bc.beta_min().is_infinite());
    CHECK(bc.beta() == Rational(0));
    CHECK(beta_min_entry_oracle(c).is_infinite());
}

TEST_CASE("single pair gives a single bar") {
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.orbits = {{"x", Rational(0), 0}, {"y", Rational(3, 4), 1}};
    c.rebuild_index();
    c.set_entry(0, 1, NovikovScalar::one());
    auto bc = barcode(c);
    REQUIRE(bc.finite_bars.size() == 1);
    CHECK(bc.finite_bars[0] == Rational(3, 4));
    CHECK(bc.beta_min() == Action(Rational(3, 4)));
    CHECK(bc.beta() == Rational(3, 4));
}

TEST_CASE("recapping-adjusted entry gap") {
    // entry q^1 from x(A=0) to y(A=0.1), lambda0 = 0.5 -> gap 0.6
    FilteredComplex c;
    c.params = {1, Rational(1, 2), 1};
    c.graded = false;
    c.orbits = {{"x", Rational(0), 0}, {"y", Rational(1, 10), 0}};
    c.rebuild_index();
    c.set_entry(0, 1, NovikovScalar::monomial(1));
    CHECK(beta_min_entry_oracle(c) == Action(Rational(3, 5)));
    CHECK(beta_min(c) == Action(Rational(3, 5)));
}

TEST_CASE("orthogonality examples") {
    FilteredComplex c = zero_complex(0);
    c.orbits = {{"a", Rational(0), 0}, {"b", Rational(1, 5), 0}, {"c", Rational(1), 0}};
    c.rebuild_index();

    ChainVector ac = ChainVector::unit(0) + ChainVector::unit(2);
    ChainVector b = ChainVector::unit(1);
    CHECK(is_orthogonal({ac, b}, c));

    ChainVector a = ChainVector::unit(0);
    CHECK_FALSE(is_orthogonal({a, ac}, c));  // lambda_1 = lambda_2 = 1 cancels to c

    CHECK(is_orthogonal({ac}, c));

    CHECK(is_orthogonal_window_oracle({ac, b}, c));
    CHECK_FALSE(is_orthogonal_window_oracle({a, ac}, c));

    // recap-aligned cancellation: q*a vs a collides after alignment
    ChainVector qa = ChainVector::unit(0).recapped(1);
    CHECK_FALSE(is_orthogonal({a, qa}, c));
    CHECK_FALSE(is_orthogonal_window_oracle({a, qa}, c));
}

TEST_CASE("pivot policies agree on the bar multiset") {
    auto c = four_orbit();
    auto b1 = barcode(c, PivotPolicy::GlobalMinGap);
    auto b2 = barcode(c, PivotPolicy::GlobalMinGapReversed);
    auto b3 = barcode(c, PivotPolicy::ColumnSweep);
    CHECK(b1.finite_bars == b2.finite_bars);
    CHECK(b1.finite_bars == b3.finite_bars);
    CHECK(b1.infinite_bar_count == b2.infinite_bar_count);
    CHECK(b1.infinite_bar_count == b3.infinite_bar_count);
}

TEST_CASE("chain probe finds no violations and the witness attains") {
    auto c = four_orbit();
    auto report = beta_min_chain_probe(c, 200, 42);
    CHECK(report.ok());
    CHECK(report.witness_attains);
    CHECK(report.trials > 0);

    auto empty = beta_min_chain_probe(c, 0, 1);
    CHECK(empty.ok());
    CHECK(empty.trials == 0);
}

TEST_CASE("tie-degenerate complex still yields an orthogonal decomposition") {
    // two sources with the same action feeding the same target orbit
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.graded = false;
    c.orbits = {{"u", Rational(0), 0},
                {"v", Rational(0), 0},
                {"w", Rational(1), 1},
                {"t", Rational(2), 1}};
    c.rebuild_index();
    c.set_entry(0, 2, NovikovScalar::one());
    c.set_entry(1, 2, NovikovScalar::one());
    c.set_entry(1, 3, NovikovScalar::one());
    REQUIRE(c.validate().valid());

    auto d = singular_decomposition(c);
    REQUIRE(d.pairs.size() == 2);
    std::vector<ChainVector> all;
    for (const auto& p : d.pairs) {
        CHECK(c.differential(p.eta) == p.gamma);
        all.push_back(p.eta);
        all.push_back(p.gamma);
    }
    for (const auto& a : d.cycles) {
        CHECK(c.differential(a).is_zero());
        all.push_back(a);
    }
    CHECK(all.size() == 4);
    CHECK(is_orthogonal(all, c));
    CHECK(is_orthogonal_window_oracle(all, c));

    auto b1 = barcode(c, PivotPolicy::GlobalMinGap);
    auto b2 = barcode(c, PivotPolicy::GlobalMinGapReversed);
    auto b3 = barcode(c, PivotPolicy::ColumnSweep);
    CHECK(b1.finite_bars == b2.finite_bars);
    CHECK(b1.finite_bars == b3.finite_bars);
}
