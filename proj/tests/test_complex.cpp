#include <doctest.h>

#include "nvk/complex.hpp"

using namespace nvk;

namespace {

// two-generator complex d(x) = y with A(y) > A(x), mu(y) = mu(x) + 1
FilteredComplex two_orbit(Rational ax, Rational ay, const NovikovScalar& entry) {
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.orbits = {{"x", ax, 0}, {"y", ay, 1}};
    c.rebuild_index();
    c.set_entry(0, 1, entry);
    return c;
}

}  // namespace

TEST_CASE("action of a chain is the minimum over the support") {
    FilteredComplex c;
    c.params = {1, Rational(1, 2), 1};  // lambda0 = 0.5
    c.orbits = {{"x", Rational(3, 10), 0}, {"y", Rational(1, 10), 0}};
    c.rebuild_index();

    ChainVector xi;
    xi.add(0, NovikovScalar::one());                // x
    xi.add(1, NovikovScalar::monomial(1));          // q*y: action 0.1 + 0.5
    CHECK(c.action_of_chain(xi) == Action(Rational(3, 10)));

    CHECK(c.action_of_chain(ChainVector()).is_infinite());

    ChainVector zeta;
    zeta.add(0, NovikovScalar::parse("1/(1+q)"));   // valuation 0
    FilteredComplex c2;
    c2.params = c.params;
    c2.orbits = {{"x", Rational(1), 0}};
    c2.rebuild_index();
    CHECK(c2.action_of_chain(zeta) == Action(Rational(1)));
}

TEST_CASE("validate accepts and rejects per the action and grading rules") {
    auto ok = two_orbit(Rational(0), Rational(1), NovikovScalar::one());
    CHECK(ok.validate().valid());

    auto flat = two_orbit(Rational(0), Rational(0), NovikovScalar::one());
    auto report = flat.validate();
    REQUIRE_FALSE(report.valid());
    CHECK(report.violations.front().code == "action");

    // d(a)=c, d(c)=e with d^2(a) = e != 0
    FilteredComplex c;
    c.params = {1, Rational(10), 1};
    c.orbits = {{"a", Rational(0), 0}, {"c", Rational(1), 1}, {"e", Rational(2), 2}};
    c.rebuild_index();
    c.set_entry(0, 1, NovikovScalar::one());
    c.set_entry(1, 2, NovikovScalar::one());
    bool saw_dsq = false;
    for (const auto& v : c.validate().violations) saw_dsq |= v.code == "d-squared";
    CHECK(saw_dsq);

    // graded complex rejects non-monomial entries and index mismatches
    auto multi = two_orbit(Rational(0), Rational(1), NovikovScalar::parse("1+q"));
    bool saw_grading = false;
    for (const auto& v : multi.validate().violations) saw_grading |= v.code == "grading";
    CHECK(saw_grading);

    auto rational_entry = two_orbit(Rational(0), Rational(1), NovikovScalar::parse("1/(1+q)"));
    bool saw_entry = false;
    for (const auto& v : rational_entry.validate().violations) saw_entry |= v.code == "entry";
    CHECK(saw_entry);

    // ungraded complexes allow multi-term entries
    auto ungraded = two_orbit(Rational(0), Rational(1), NovikovScalar::parse("1+q"));
    ungraded.graded = false;
    CHECK(ungraded.validate().valid());
}

TEST_CASE("recapping shifts action and index and commutes with d") {
    auto c = two_orbit(Rational(0), Rational(1), NovikovScalar::one());
    ChainVector xi = ChainVector::unit(0);
    ChainVector up = recap_chain(xi, 1);
    CHECK(c.action_of_chain(up) == Action(Rational(10)));  // +lambda0
    CHECK(recap_chain(up, -1) == xi);

    CHECK(c.index_of({0, 1}) == 0 + 2);
    CHECK(c.action_of({0, 1}) == Rational(10));

    // d(q^k xi) = q^k d(xi)
    ChainVector lhs = c.differential(recap_chain(xi, 3));
    ChainVector rhs = recap_chain(c.differential(xi), 3);
    CHECK(lhs == rhs);
}

TEST_CASE("pairing coefficient") {
    auto c = two_orbit(Rational(0), Rational(1), NovikovScalar::one());
    ChainVector eta;
    eta.add(0, NovikovScalar::one());
    eta.add(1, NovikovScalar::one());
    CHECK(c.pairing_coefficient({0, 0}, eta));        // <x, x+y> = 1
    CHECK_FALSE(c.pairing_coefficient({0, 1}, eta));  // <qx, x+y> = 0

    ChainVector scaled;
    scaled.add(0, NovikovScalar::parse("1+q"));
    CHECK(c.pairing_coefficient({0, 1}, scaled));     // <qx, (1+q)x> = 1

    ChainVector other = ChainVector::unit(1);
    CHECK_FALSE(c.pairing_coefficient({0, 0}, other));

    ChainVector bad;
    bad.add(0, NovikovScalar::parse("1/(1+q)"));
    CHECK_THROWS_AS(c.pairing_coefficient({0, 0}, bad), std::domain_error);
}

TEST_CASE("frobenius double squares entries and doubles actions") {
    auto c = two_orbit(Rational(1, 5), Rational(13, 10), NovikovScalar::monomial(2));
    auto d = c.frobenius_double();
    CHECK(d.orbits[0].action == Rational(2, 5));
    CHECK(d.orbits[1].action == Rational(13, 5));
    CHECK(d.entry(0, 1) == NovikovScalar::monomial(4));
    CHECK(d.orbits[0].label == "x^2");
    CHECK(d.validate().valid());
}
