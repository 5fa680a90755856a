#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "triplekit/axiom.hpp"
#include "triplekit/liecheck.hpp"
#include "triplekit/sweep.hpp"
#include "triplekit/tensor.hpp"

using namespace triplekit;

namespace {

// so(3)-style bracket: [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e1 (and antisymmetry)
BilinearTensor<Rational> cross_product() {
    BasedSpace s(3);
    BilinearTensor<Rational> t(s, s, s);
    t.at(0, 1, 2) = Rational(1);
    t.at(1, 0, 2) = Rational(-1);
    t.at(1, 2, 0) = Rational(1);
    t.at(2, 1, 0) = Rational(-1);
    t.at(2, 0, 1) = Rational(1);
    t.at(0, 2, 1) = Rational(-1);
    return t;
}

} // namespace

TEST_CASE("based space labels and parity") {
    BasedSpace s(3, "x");
    CHECK(s.dim() == 3);
    CHECK(s.label(2) == "x2");
    CHECK(!s.graded());
    CHECK(s.parity(0) == Parity::Even);

    BasedSpace g({"a", "b"}, std::vector<Parity>{Parity::Even, Parity::Odd});
    CHECK(g.graded());
    CHECK(g.parity(1) == Parity::Odd);

    CHECK_THROWS_AS(BasedSpace({"a", "a"}), DimError);
    CHECK_THROWS_AS(BasedSpace({"a", "b"}, std::vector<Parity>{Parity::Even}), DimError);
}

TEST_CASE("bilinear tensor evaluation agrees with hand expansion") {
    auto t = cross_product();
    // (1,2,0) x (0,1,3) = (2*3-0*1, 0*0-1*3, 1*1-2*0) = (6, -3, 1)
    Vec<Rational> x = {Rational(1), Rational(2), Rational(0)};
    Vec<Rational> y = {Rational(0), Rational(1), Rational(3)};
    Vec<Rational> r = t.apply(x, y);
    CHECK(r[0] == Rational(6));
    CHECK(r[1] == Rational(-3));
    CHECK(r[2] == Rational(1));

    CHECK(t.left_matrix(x).apply(y) == r);
    CHECK(t.right_matrix(y).apply(x) == r);
    CHECK(t.is_skew());
    CHECK(!t.is_symmetric());
    CHECK(t.basis_product(0, 1) == vec_unit<Rational>(3, 2));
}

TEST_CASE("trilinear tensor evaluation and slices") {
    BasedSpace s(2);
    TrilinearTensor<Rational> t(s, s, s, s);
    t.at(0, 1, 0, 1) = Rational(5);
    t.at(1, 1, 1, 0) = Rational(-2, 3);

    Vec<Rational> e0 = vec_unit<Rational>(2, 0), e1 = vec_unit<Rational>(2, 1);
    CHECK(t.apply(e0, e1, e0)[1] == Rational(5));
    CHECK(t.apply(e1, e1, e1)[0] == Rational(-2, 3));
    CHECK(vec_is_zero(t.apply(e0, e0, e0)));

    CHECK(t.matrix_fixing_12(e0, e1).at(1, 0) == Rational(5));
    CHECK(t.matrix_fixing_13(e1, e1).at(0, 1) == Rational(-2, 3));
    CHECK(t.same_coefficients(t));

    TrilinearTensor<Rational> u(s, s, s, s);
    CHECK(!t.same_coefficients(u));
}

TEST_CASE("jacobi defect is empty for a Lie bracket and localizes breakage") {
    auto t = cross_product();
    CHECK(jacobi_defect(t).empty());

    // give [e0,e1] an extra e0 component (sign flips alone just change the
    // metric signature and stay Lie)
    auto broken = t;
    broken.at(0, 1, 0) = Rational(1);
    broken.at(1, 0, 0) = Rational(-1);
    auto bad = jacobi_defect(broken);
    CHECK(!bad.empty());
}

TEST_CASE("super jacobi respects parities") {
    // gl(1|1)-flavored bracket on {h, q} with h even, q odd:
    // [h,q] = q = [q,h] sign-corrected, [q,q] = h (symmetric for odd-odd).
    BasedSpace s({"h", "q"}, std::vector<Parity>{Parity::Even, Parity::Odd});
    BilinearTensor<Rational> b(s, s, s);
    b.at(0, 1, 1) = Rational(2);
    b.at(1, 0, 1) = Rational(-2);
    b.at(1, 1, 0) = Rational(0); // [q,q] = 0 keeps super-Jacobi exact here
    CHECK(jacobi_defect(b, true).empty());
    CHECK(parity_defect(b).empty());

    // parity violation: [h,q] gets an even component
    auto broken = b;
    broken.at(0, 1, 0) = Rational(1);
    CHECK(!parity_defect(broken).empty());
}

TEST_CASE("derivation checks") {
    auto t = cross_product();
    // ad(e0) is a derivation of the bracket
    Matrix<Rational> ad0 = t.left_matrix(vec_unit<Rational>(3, 0));
    CHECK(is_derivation(ad0, t));
    CHECK(!derivation_defect(ad0, t).has_value());

    Matrix<Rational> scale = Matrix<Rational>::identity(3);
    CHECK(!is_derivation(scale, t)); // identity fails Leibniz: m(xy) != 2(xy)

    TrilinearTensor<Rational> trip(t.out(), t.out(), t.out(), t.out());
    CHECK(is_triple_derivation(ad0, trip)); // zero triple: trivially satisfied
}

TEST_CASE("identity sweep helpers report counterexamples") {
    BasedSpace s(2);
    TupleSpace space{{2, 2}};
    auto good = check_identity_vec<Rational>(
        "always_equal", space,
        [&](const std::vector<std::size_t>&) {
            return std::pair{vec_zero<Rational>(2), vec_zero<Rational>(2)};
        },
        s.labels());
    CHECK(good.status == CheckStatus::Pass);

    auto bad = check_identity_vec<Rational>(
        "breaks_at_11", space,
        [&](const std::vector<std::size_t>& t) {
            Vec<Rational> lhs = vec_zero<Rational>(2);
            if (t[0] == 1 && t[1] == 1) lhs[0] = Rational(1);
            return std::pair{lhs, vec_zero<Rational>(2)};
        },
        s.labels());
    CHECK(bad.status == CheckStatus::Fail);
    REQUIRE(bad.counterexample.has_value());
    CHECK(bad.counterexample->tuple == std::vector<std::size_t>{1, 1});

    auto vac = check_identity_vec<Rational>(
        "no_tuples", TupleSpace{{0, 2}},
        [&](const std::vector<std::size_t>&) {
            return std::pair{vec_zero<Rational>(2), vec_zero<Rational>(2)};
        },
        s.labels());
    CHECK(vac.status == CheckStatus::Vacuous);
}

TEST_CASE("tuple space decodes lexicographically") {
    TupleSpace sp{{2, 3}};
    CHECK(sp.total() == 6);
    CHECK(sp.decode(0) == std::vector<std::size_t>{0, 0});
    CHECK(sp.decode(5) == std::vector<std::size_t>{1, 2});
    CHECK(sp.decode(4) == std::vector<std::size_t>{1, 1});
}

TEST_CASE("sweeps find the smallest failure index regardless of threads") {
    // 10000 indices; failures at 7777 and 9999; smallest must win
    auto probe = [](std::size_t i) -> std::optional<int> {
        if (i == 7777 || i == 9999) return 42;
        return std::nullopt;
    };
    auto hit = sweep_first_failure<int>(10000, probe);
    REQUIRE(hit.has_value());
    CHECK(hit->first == 7777);

    auto all = sweep_all_failures<int>(10000, probe);
    REQUIRE(all.size() == 2);
    CHECK(all[0].first == 7777);
    CHECK(all[1].first == 9999);

    CHECK(!sweep_first_failure<int>(0, probe).has_value());
}

TEST_CASE("thread cap respects the environment") {
    setenv("TRIPLEKIT_THREADS", "1", 1);
    CHECK(sweep_threads() == 1);
    setenv("TRIPLEKIT_THREADS", "3", 1);
    CHECK(sweep_threads() == 3);
    setenv("TRIPLEKIT_THREADS", "0", 1);
    CHECK(sweep_threads() == 1); // floor at one worker
    unsetenv("TRIPLEKIT_THREADS");
    CHECK(sweep_threads() >= 1);
}
