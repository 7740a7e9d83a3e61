#include <doctest.h>

#include <random>

#include "nvk/rational.hpp"
#include "nvk/scalar.hpp"

using nvk::F2Poly;
using nvk::NovikovScalar;
using nvk::Rational;

namespace {

NovikovScalar S(const std::string& text) { return NovikovScalar::parse(text); }

// random rational function with small polynomial factors
NovikovScalar random_scalar(std::mt19937_64& rng, bool allow_zero = true) {
    auto poly = [&](int max_deg) {
        F2Poly p;
        std::uint64_t bits = rng();
        for (int d = 0; d <= max_deg; ++d)
            if ((bits >> d) & 1) p = p + F2Poly::monomial(d);
        return p;
    };
    F2Poly num = poly(6);
    if (num.is_zero() && !allow_zero) num = F2Poly::one();
    F2Poly den = poly(5) + F2Poly::one();
    if (den.is_zero()) den = F2Poly::one();
    std::int64_t shift = static_cast<std::int64_t>(rng() % 11) - 5;
    return NovikovScalar::make(num, den, shift);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(13, 10) - Rational(2, 10) == Rational(11, 10));
    CHECK(Rational::parse("1.3") == Rational(13, 10));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse("7/4") == Rational(7, 4));
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(0.1) != Rational(1, 10));  // dyadic, not decimal
    CHECK(Rational(7, 3).mod(Rational(2)) == Rational(1, 3));
    CHECK(Rational(-1, 3).mod(Rational(2)) == Rational(5, 3));
    CHECK(Rational(11, 10).decimal_str() == "1.1");
    CHECK(Rational(-3, 8).decimal_str() == "-0.375");
    CHECK(Rational(1, 3).decimal_str() == "1/3");
    CHECK(Rational(5, 2) < Rational(8, 3));
}

TEST_CASE("f2poly arithmetic") {
    F2Poly a = F2Poly::from_coeffs({0, 2});  // 1 + q^2
    F2Poly b = F2Poly::from_coeffs({0, 1});  // 1 + q
    CHECK((b * b) == a);                     // (1+q)^2 = 1+q^2 in char 2
    CHECK((a + a).is_zero());
    CHECK(a.degree() == 2);
    CHECK(F2Poly::gcd(a, b) == b);
    auto dm = a.divmod(b);
    CHECK(dm.first == b);
    CHECK(dm.second.is_zero());
    CHECK(b.substitute_square() == a);
    CHECK(a.str() == "1+q^2");
}

TEST_CASE("scalar examples from the contract") {
    CHECK(S("1+q") + S("q") == S("1"));
    CHECK((S("q^-1") + S("1")) == S("q^-1*(1+q)"));
    CHECK(S("q^2").inv() == S("q^-2"));
    CHECK(S("q") * S("q^-1") == S("1"));
    CHECK(S("(1+q)").inv() == S("1/(1+q)"));
    CHECK(S("1/(1+q)") * S("1+q") == S("1"));

    CHECK(S("q+q^3").valuation() == 1);
    CHECK(S("(q+q^3)/(1+q)").valuation() == 1);
    CHECK(S("0").valuation() == NovikovScalar::kInfValuation);
}

TEST_CASE("scalar canonical form and printing") {
    // gcd cancellation: (q+q^3)/(1+q) = q(1+q^2)/(1+q) = q(1+q)
    CHECK(S("(q+q^3)/(1+q)") == S("q*(1+q)"));
    CHECK(S("q^-1*(1+q^2)/(1+q)").str() == "q^-1*(1+q)");
    CHECK(S("0").str() == "0");
    CHECK(S("1").str() == "1");
    CHECK(S("q^3").str() == "q^3");
    CHECK(S("1/(1+q)").str() == "1/(1+q)");
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        NovikovScalar a = random_scalar(rng);
        NovikovScalar b = random_scalar(rng);
        NovikovScalar c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + a == NovikovScalar::zero());
        if (!a.is_zero()) CHECK(a * a.inv() == NovikovScalar::one());
    }
}

TEST_CASE("valuation is a discrete valuation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        NovikovScalar a = random_scalar(rng, false);
        NovikovScalar b = random_scalar(rng, false);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        NovikovScalar s = a + b;
        std::int64_t lo = std::min(a.valuation(), b.valuation());
        if (!s.is_zero()) {
            CHECK(s.valuation() >= lo);
            if (a.valuation() != b.valuation()) CHECK(s.valuation() == lo);
        }
    }
}

TEST_CASE("parser round-trip is exact") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        NovikovScalar a = random_scalar(rng);
        NovikovScalar back = NovikovScalar::parse(a.str());
        CHECK(back == a);
    }
}

TEST_CASE("laurent support and frobenius square") {
    NovikovScalar a = S("q^-1*(1+q^2)");
    auto sup = a.laurent_support();
    REQUIRE(sup.size() == 2);
    CHECK(sup[0] == -1);
    CHECK(sup[1] == 1);
    CHECK(a.laurent_coeff(-1));
    CHECK_FALSE(a.laurent_coeff(0));
    CHECK(a.frobenius_square() == S("q^-2*(1+q^4)"));
    CHECK_THROWS_AS(S("1/(1+q)").laurent_support(), std::domain_error);
    // frobenius squares the value: (a^2 = a(q)^2 = a(q^2))
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        NovikovScalar x = random_scalar(rng);
        CHECK(x.frobenius_square() == x * x);
    }
}
