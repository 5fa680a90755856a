#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplekit/cyclotomic.hpp"
#include "triplekit/rational.hpp"

using namespace triplekit;

TEST_CASE("rational arithmetic is exact and normalized") {
    Rational a = Rational::parse("2/4");
    CHECK(a.str() == "1/2");
    CHECK(a + a == Rational(1));
    CHECK(Rational(3) / Rational(6) == a);
    CHECK((Rational(1) / Rational(3) + Rational(1) / Rational(6)).str() == "1/2");
    CHECK((-a).str() == "-1/2");
    CHECK(Rational(0).is_zero());
    CHECK(Rational(7).inverse().str() == "1/7");
    CHECK(Rational::parse("-15/35").str() == "-3/7");

    // no floating point drift: (1/3)*3 is exactly 1
    Rational third = Rational(1) / Rational(3);
    CHECK(third * Rational(3) == Rational(1));
}

TEST_CASE("rational parsing accepts only integers and fractions") {
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational::parse("-12").str() == "-12");
    CHECK(Rational::parse("100000000000000000000/3").str() == "100000000000000000000/3");

    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse(" 1"), ParseError);
}

TEST_CASE("rational division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("big numerators survive round trips") {
    std::string s = "123456789012345678901234567890/987654321";
    Rational r = Rational::parse(s);
    CHECK(Rational::parse(r.str()) == r);
}

TEST_CASE("omega satisfies w^2 + w + 1 = 0") {
    Cyc w = Cyc::omega();
    CHECK(w * w + w + Cyc::one() == Cyc::zero());
    CHECK(w * w * w == Cyc::one());
    CHECK(w != Cyc::one());
}

TEST_CASE("cyclotomic conjugate and norm") {
    Cyc w = Cyc::omega();
    Cyc z(Rational(3), Rational(-2)); // 3 - 2w
    CHECK(z.conj() == Cyc(Rational(5), Rational(2)));
    CHECK(z * z.conj() == Cyc(z.norm()));
    CHECK(z.norm() == Rational(19)); // 9 + 6 + 4
    CHECK(w.conj() == w * w);
    CHECK(Cyc::zero().norm().is_zero());
}

TEST_CASE("cyclotomic field inverse") {
    Cyc w = Cyc::omega();
    Cyc z = Cyc(Rational(1, 2)) + Cyc(Rational(5)) * w;
    CHECK(z * z.inverse() == Cyc::one());
    CHECK(w.inverse() == w * w);
    CHECK_THROWS_AS(Cyc::zero().inverse(), DivisionByZero);

    Cyc q = (Cyc::one() - w) / (Cyc::one() + w);
    CHECK(q * (Cyc::one() + w) == Cyc::one() - w);
}

TEST_CASE("cyclotomic printing") {
    CHECK(Cyc::zero().str() == "0");
    CHECK(Cyc(Rational(-3, 4)).str() == "-3/4");
    CHECK(Cyc::omega().str() == "w");
    CHECK((-Cyc::omega()).str() == "-w");
    CHECK(Cyc(Rational(1), Rational(2)).str() == "1+2*w");
    CHECK(Cyc(Rational(1), Rational(-1)).str() == "1-w");
    CHECK(Cyc(Rational(0), Rational(1, 3)).str() == "1/3*w");
}

TEST_CASE("rationals embed in Q(w)") {
    CHECK(promote(Rational(2, 3)) == Cyc(Rational(2, 3)));
    CHECK(promote(Rational(2, 3)).is_rational());
    CHECK(!Cyc::omega().is_rational());
    static_assert(has_omega<Cyc>);
    static_assert(!has_omega<Rational>);
}
