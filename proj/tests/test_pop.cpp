#include <doctest.h>

#include "nvk/generate.hpp"
#include "nvk/harness.hpp"
#include "nvk/pop.hpp"

using namespace nvk;

TEST_CASE("pseudo-rotation model passes all axioms") {
    GeneratorSpec spec;
    spec.model = SyntheticModel::PseudoRotation;
    spec.orbit_count = 3;
    spec.seed = 5;
    auto t = generate_synthetic(spec);
    CHECK(t.c.validate().valid());
    CHECK(t.e.validate().valid());
    CHECK(t.e.correction_order() == 0);
    CHECK(t.c.entries().empty());
    auto report = check_all(t.pop, t.c, t.e);
    CHECK(report.chain_map.pass);
    CHECK(report.filtration.pass);
    CHECK(report.seidel.pass);
    CHECK(report.h0.skipped);
}

TEST_CASE("two-orbit frobenius triple solves the chain map") {
    GeneratorSpec spec;
    spec.orbit_count = 2;
    spec.seed = 1;
    spec.bar_lengths = {Rational(1)};
    auto t = generate_synthetic(spec);
    REQUIRE(t.c.validate().valid());
    REQUIRE(t.e.validate().valid());
    auto report = check_all(t.pop, t.c, t.e);
    CHECK(report.chain_map.pass);
    CHECK(report.filtration.pass);
    CHECK(report.seidel.pass);

    // frobenius doubling squares coefficients: bar 1 in C gives arrow 2 in E
    Action eq_min = beta_min_entry_oracle(evaluate_h1(t.e).complex);
    CHECK(eq_min == Action(Rational(2)));
}

TEST_CASE("frobenius triples over several seeds pass the axiom gate") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        GeneratorSpec spec;
        spec.orbit_count = 4 + static_cast<int>(seed % 3);
        spec.seed = seed;
        auto t = generate_synthetic(spec);
        auto report = check_all(t.pop, t.c, t.e);
        CHECK(report.all_pass());
        CHECK(t.e.validate().valid());
    }
}

TEST_CASE("corrupting a passing map trips a checker") {
    GeneratorSpec spec;
    spec.orbit_count = 4;
    spec.seed = 9;
    auto t = generate_synthetic(spec);
    REQUIRE(check_all(t.pop, t.c, t.e).all_pass());

    // dropping a Seidel leading term must fail the non-vanishing check
    PairOfPantsMap no_lead = t.pop;
    no_lead.set_value(0, 0, EqChain{});
    CHECK_FALSE(check_all(no_lead, t.c, t.e).all_pass());

    // adding a non-closed term to an off-diagonal value must break the
    // chain map: orbit 0 squared carries a planted arrow, so d~ of it is
    // nonzero while the group-cochain side is unchanged
    PairOfPantsMap skewed = t.pop;
    int source_sq = t.pop.squaring[0];
    REQUIRE_FALSE(t.e.base.row(source_sq).empty());
    EqChain v = skewed.value(0, 1);
    v.add(source_sq, 0, NovikovScalar::monomial(3));
    skewed.set_value(0, 1, v);
    CHECK_FALSE(check_all(skewed, t.c, t.e).all_pass());
}

TEST_CASE("zero map fails the seidel check but not the chain map") {
    GeneratorSpec spec;
    spec.model = SyntheticModel::PseudoRotation;
    spec.orbit_count = 2;
    spec.seed = 3;
    auto t = generate_synthetic(spec);
    PairOfPantsMap zero;
    zero.squaring = t.pop.squaring;
    auto report = check_all(zero, t.c, t.e);
    CHECK(report.chain_map.pass);   // both sides vanish
    CHECK(report.filtration.pass);  // vacuous
    CHECK_FALSE(report.seidel.pass);
}

TEST_CASE("seidel exponent arithmetic") {
    // mu(x) = 1, mu(x^2) = 0, n = 2 -> m = 2*1 - 0 + 2 = 4
    FilteredComplex c;
    c.params = {1, Rational(10), 2};
    c.orbits = {{"x", Rational(1), 1}};
    c.rebuild_index();
    EquivariantComplex e;
    e.base.params = c.params;
    e.base.orbits = {{"x^2", Rational(2), 0}};
    e.base.rebuild_index();

    PairOfPantsMap pop;
    pop.squaring = {0};
    EqChain good;
    good.add(0, 4, NovikovScalar::one());
    pop.set_value(0, 0, good);
    CHECK(check_seidel(pop, c, e).pass);

    EqChain wrong;
    wrong.add(0, 3, NovikovScalar::one());
    pop.set_value(0, 0, wrong);
    auto check = check_seidel(pop, c, e);
    CHECK_FALSE(check.pass);

    // m = 0 case: mu(x^2) = 2 mu(x) + n forces an h-free leading term
    e.base.orbits[0].index = 4;
    EqChain hfree;
    hfree.add(0, 0, NovikovScalar::one());
    pop.set_value(0, 0, hfree);
    CHECK(check_seidel(pop, c, e).pass);
}

TEST_CASE("filtration check flags a low-action tail") {
    GeneratorSpec spec;
    spec.model = SyntheticModel::PseudoRotation;
    spec.orbit_count = 2;
    spec.seed = 7;
    auto t = generate_synthetic(spec);
    PairOfPantsMap bad = t.pop;
    // give p(x0 x x1) a term of action far below A(x0) + A(x1)
    EqChain low;
    low.add(0, 0, NovikovScalar::monomial(-5));
    bad.set_value(0, 1, low);
    CHECK_FALSE(check_filtration(bad, t.c, t.e).pass);
}

TEST_CASE("h0 reduction against a table") {
    GeneratorSpec spec;
    spec.model = SyntheticModel::PseudoRotation;
    spec.orbit_count = 2;
    spec.seed = 11;
    auto t = generate_synthetic(spec);

    CHECK(check_h0_reduction(t.pop, std::nullopt).skipped);

    // matching table: the h^0 parts of the stored values
    ClassicalProductTable table;
    for (const auto& [key, chain] : t.pop.values()) {
        ChainVector h0;
        for (const auto& [ck, coeff] : chain.coeffs())
            if (ck.second == 0) h0.add(ck.first, coeff);
        if (!h0.is_zero()) table[key] = h0;
    }
    CHECK(check_h0_reduction(t.pop, table).pass);

    table[{0, 1}] = ChainVector::unit(0);
    CHECK_FALSE(check_h0_reduction(t.pop, table).pass);
}

TEST_CASE("planted barcode survives the transvection mixing") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomComplexSpec spec;
        spec.pair_count = 3;
        spec.free_count = 2;
        spec.transvections = 12;
        spec.seed = seed;
        auto planted = random_planted_complex(spec);
        REQUIRE(planted.complex.validate().valid());
        auto bc = barcode(planted.complex);
        CHECK(bc.finite_bars == planted.planted_bars);
        CHECK(bc.infinite_bar_count == planted.planted_infinite);
    }
}
