#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplekit/fixtures.hpp"
#include "triplekit/jternary.hpp"

using namespace triplekit;

TEST_CASE("sp2 pair satisfies the plus-variant axioms and derivation suite") {
    auto s = fixtures::sp2();
    CHECK(s.sign == 1);
    CHECK(s.nj() == 1);
    CHECK(s.nt() == 2);

    CHECK(check_jt_structure(s).ok());
    CHECK(check_jordan(s.j).ok());
    Report ax = check_jt_axioms(s);
    CHECK(ax.ok());
    // all six axioms must have actually run (no silent vacuity in dim 2)
    std::size_t ran = 0;
    for (const auto& c : ax.checks())
        if (c.status == CheckStatus::Pass) ++ran;
    CHECK(ran == ax.checks().size());
    CHECK(ax.checks().size() >= 6);

    CHECK(check_theorem_jt(s).ok());
    CHECK(verify_jternary(s).ok());
}

TEST_CASE("one-dimensional super pair satisfies the minus-variant axioms") {
    auto s = fixtures::osp_jt();
    CHECK(s.sign == -1);
    CHECK(s.nj() == 1);
    CHECK(s.nt() == 1);

    CHECK(check_jt_axioms(s).ok());
    CHECK(check_theorem_jt(s).ok());
    CHECK(verify_jternary(s).ok());

    // the angle form is symmetric in the minus variant
    CHECK(s.angle.is_symmetric());
    // <x,y,z> + <z,y,x> = <x|z>*y on the lone basis vector: 1 + 1 = 2
    Vec<Rational> e = vec_unit<Rational>(1, 0);
    CHECK(s.trip(e, e, e) + s.trip(e, e, e) == s.act(s.ang(e, e), e));
}

TEST_CASE("plus variant has a skew angle form") {
    auto s = fixtures::sp2();
    CHECK(s.angle.is_skew());
    Vec<Rational> x = vec_unit<Rational>(2, 0), y = vec_unit<Rational>(2, 1);
    CHECK(s.ang(x, y) == Vec<Rational>{Rational(1)});
    CHECK(s.ang(y, x) == Vec<Rational>{Rational(-1)});
    CHECK(vec_is_zero(s.ang(x, x)));
}

TEST_CASE("axiom sweep localizes a broken structure constant") {
    auto s = fixtures::sp2();
    s.triple.at(0, 0, 1, 0) += Rational(1);
    Report r = check_jt_axioms(s);
    CHECK(!r.ok());
    bool found_ce = false;
    for (const auto& c : r.checks())
        if (c.status == CheckStatus::Fail && c.counterexample.has_value()) found_ce = true;
    CHECK(found_ce);

    auto s2 = fixtures::sp2();
    s2.action.at(0, 1, 1) += Rational(1); // unit no longer acts as identity
    CHECK(!verify_jternary(s2).ok());

    auto s3 = fixtures::osp_jt();
    s3.angle.at(0, 0, 0) += Rational(1);
    CHECK(!check_jt_axioms(s3).ok());
}

TEST_CASE("derivation operators behave as stated by the structure theorem") {
    auto s = fixtures::sp2();
    BilinearTensor<Rational> dia = s.diamond();

    Vec<Rational> a = vec_unit<Rational>(1, 0);
    Vec<Rational> x = vec_unit<Rational>(2, 0), y = vec_unit<Rational>(2, 1);

    // D_{a,b} and d_{x,y} are derivations of the diamond product on J + T
    CHECK(is_derivation(s.d_upper(a, a), dia));
    CHECK(is_derivation(s.d_lower(x, y), dia));
    CHECK(is_derivation(s.d_lower(x, x), dia));

    // triple product recovery: <x,y,z> = (<x|y>*z - d_{x,y}(z)) / 2
    const Rational half(1, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                Vec<Rational> xi = vec_unit<Rational>(2, i), yj = vec_unit<Rational>(2, j);
                Vec<Rational> zk = vec_unit<Rational>(2, k);
                Matrix<Rational> dxy = s.d_lower(xi, yj);
                Vec<Rational> dz_t(2, Rational(0));
                {
                    // restrict d_{x,y} to the T block (J is 1-dim, offset 1)
                    Vec<Rational> full(3, Rational(0));
                    full[1 + k] = Rational(1);
                    Vec<Rational> img = dxy.apply(full);
                    dz_t[0] = img[1];
                    dz_t[1] = img[2];
                }
                Vec<Rational> lhs = s.trip(xi, yj, zk);
                Vec<Rational> rhs = half * (s.act(s.ang(xi, yj), zk) - dz_t);
                CHECK(vec_is_zero(lhs - rhs));
            }
}

TEST_CASE("round trip through the associated triple system") {
    auto s = fixtures::sp2();
    Fkts<Rational> u = to_fkts(s);
    CHECK(u.eps == 1);
    CHECK(u.delta == 1);
    CHECK(is_special(u));
    CHECK(check_fk(u).ok());

    JTernary<Rational> s2 = from_special_fkts(u);
    CHECK(compare_jt_via_action(s2, s).ok());
}

TEST_CASE("round trip in the opposite order returns the same tensors") {
    for (auto u : {fixtures::fkts_b(), fixtures::osp()}) {
        JTernary<Rational> s = from_special_fkts(u);
        Fkts<Rational> u2 = to_fkts(s);
        CHECK(u2.eps == u.eps);
        CHECK(u2.delta == u.delta);
        CHECK(u2.triple.same_coefficients(u.triple));
    }
}

TEST_CASE("conversion preconditions are enforced") {
    // jts is a valid system but not special with matching signs
    CHECK_THROWS_AS(from_special_fkts(fixtures::jts()), PreconditionError);

    auto bad = fixtures::fkts_b();
    bad.triple.at(0, 0, 0, 0) += Rational(1);
    CHECK_THROWS_AS(from_special_fkts(bad), PreconditionError);

    auto s = fixtures::sp2();
    s.triple.at(0, 0, 1, 0) += Rational(1);
    CHECK_THROWS_AS(to_fkts(s), PreconditionError);
}

TEST_CASE("comparison helper flags genuinely different pairs") {
    auto a = fixtures::sp2();
    auto b = fixtures::sp2();
    CHECK(compare_jt_via_action(a, b).ok());
    b.triple.at(0, 0, 0, 1) += Rational(1);
    CHECK(!compare_jt_via_action(a, b).ok());
}
