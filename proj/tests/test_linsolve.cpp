#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "triplekit/linsolve.hpp"

using namespace triplekit;

namespace {

Vec<Rational> qvec(std::initializer_list<long> xs) {
    Vec<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

Matrix<Rational> qmat(std::size_t r, std::size_t c, std::initializer_list<long> xs) {
    Matrix<Rational> m(r, c);
    std::size_t i = 0;
    for (long x : xs) {
        m.at(i / c, i % c) = Rational(x);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("span basis of dependent vectors") {
    std::vector<Vec<Rational>> in = {qvec({1, 2, 3}), qvec({2, 4, 6}), qvec({0, 1, 1})};
    auto sp = span_basis(in, 3);
    CHECK(sp.rank() == 2);
    CHECK(sp.contains(qvec({1, 2, 3})));
    CHECK(sp.contains(qvec({1, 3, 4})));
    CHECK(!sp.contains(qvec({0, 0, 1})));

    // expand_in_inputs reproduces the vector as an input combination
    Vec<Rational> v = qvec({3, 7, 10}); // = in[0] + in[1] + ... check: 1*in0 + 1*in1 + 1*in2 = (3,7,10)
    auto coeff = sp.expand_in_inputs(v);
    REQUIRE(coeff.has_value());
    Vec<Rational> rebuilt = vec_zero<Rational>(3);
    for (std::size_t i = 0; i < in.size(); ++i) axpy(rebuilt, (*coeff)[i], in[i]);
    CHECK(vec_is_zero(rebuilt - v));
}

TEST_CASE("span basis handles fractions without drift") {
    std::vector<Vec<Rational>> in = {
        {Rational(1, 3), Rational(1, 7)},
        {Rational(1, 2), Rational(5, 11)},
    };
    auto sp = span_basis(in, 2);
    CHECK(sp.rank() == 2);
    auto c = sp.expand_in_inputs({Rational(13, 42), Rational(-3, 77)});
    REQUIRE(c.has_value());
    Vec<Rational> rebuilt = vec_zero<Rational>(2);
    axpy(rebuilt, (*c)[0], in[0]);
    axpy(rebuilt, (*c)[1], in[1]);
    CHECK(rebuilt[0] == Rational(13, 42));
    CHECK(rebuilt[1] == Rational(-3, 77));
}

TEST_CASE("select_basis keeps earliest independent inputs") {
    std::vector<Vec<Rational>> in = {qvec({0, 0}), qvec({1, 1}), qvec({2, 2}), qvec({1, 0})};
    auto sel = select_basis(in, 2);
    CHECK(sel.rank() == 2);
    CHECK(sel.chosen == std::vector<std::size_t>{1, 3});
    auto c = sel.expand(qvec({0, 1}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rational(1));  // (0,1) = (1,1) - (1,0)
    CHECK((*c)[1] == Rational(-1));
}

TEST_CASE("select_basis with no nonzero input yields usable rank-0 span") {
    std::vector<Vec<Rational>> in = {qvec({0, 0, 0})};
    auto sel = select_basis(in, 3);
    CHECK(sel.rank() == 0);
    auto c = sel.expand(qvec({0, 0, 0}));
    REQUIRE(c.has_value());
    CHECK(c->empty());
    CHECK(!sel.contains(qvec({1, 0, 0})));

    auto empty = select_basis<Rational>({}, 4);
    CHECK(empty.rank() == 0);
    CHECK(empty.contains(vec_zero<Rational>(4)));
}

TEST_CASE("kernel vectors are ordered by free column and exact") {
    // x + 2y + 3z = 0 over a rank-1 system: kernel is 2-dimensional
    Matrix<Rational> m = qmat(1, 3, {1, 2, 3});
    auto null = kernel(m);
    REQUIRE(null.size() == 2);
    CHECK(null[0][1] == Rational(1)); // free column 1 first
    CHECK(null[1][2] == Rational(1)); // then free column 2
    for (const auto& v : null) CHECK(vec_is_zero(m.apply(v)));
}

TEST_CASE("kernel of identity-like maps") {
    CHECK(kernel(Matrix<Rational>::identity(4)).empty());
    auto null = kernel(Matrix<Rational>(2, 3)); // zero map
    CHECK(null.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(null[i] == vec_unit<Rational>(3, i));
}

TEST_CASE("rank and inverse") {
    CHECK(rank(qmat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(Matrix<Rational>::identity(5)) == 5);

    Matrix<Rational> m = qmat(3, 3, {2, 1, 0, 0, 1, -1, 3, 0, 1});
    Matrix<Rational> mi = inverse(m);
    CHECK(m * mi == Matrix<Rational>::identity(3));
    CHECK(mi * m == Matrix<Rational>::identity(3));

    CHECK_THROWS_AS(inverse(qmat(2, 2, {1, 2, 2, 4})), PreconditionError);
}

TEST_CASE("linear solving works over Q(w)") {
    Cyc w = Cyc::omega();
    std::vector<Vec<Cyc>> in = {
        {Cyc::one(), w},
        {w, w * w},      // = w * in[0], dependent
        {Cyc::one(), Cyc::one()},
    };
    auto sp = span_basis(in, 2);
    CHECK(sp.rank() == 2);

    // eigenvector check: kernel of (phi - w id) for phi = [[0,-1],[1,-1]] (order 3)
    Matrix<Cyc> phi(2, 2);
    phi.at(0, 1) = -Cyc::one();
    phi.at(1, 0) = Cyc::one();
    phi.at(1, 1) = -Cyc::one();
    Matrix<Cyc> id = Matrix<Cyc>::identity(2);
    CHECK(phi * phi * phi == id);
    auto eig = kernel(phi - w * id);
    REQUIRE(eig.size() == 1);
    CHECK(vec_is_zero(phi.apply(eig[0]) - w * eig[0]));
}

TEST_CASE("pivoting survives a zero leading entry") {
    Matrix<Rational> m = qmat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
    CHECK(rank(m) == 3);
    Matrix<Rational> mi = inverse(m);
    CHECK(m * mi == Matrix<Rational>::identity(3));
}
