#include "triplekit/fixtures.hpp"

namespace triplekit::fixtures {

namespace {
const Rational one = Rational::one();
const Rational two = Rational::from_int(2);
} // namespace

Fkts<Rational> zero(std::size_t n, int eps, int delta) {
    Fkts<Rational> u;
    u.space = BasedSpace(n, "e");
    u.eps = eps;
    u.delta = delta;
    u.triple = TrilinearTensor<Rational>(u.space, u.space, u.space, u.space);
    return u;
}

Fkts<Rational> fkts_b() {
    Fkts<Rational> u = zero(2, 1, 1);
    // e_i e_j e_k = s(i,j) e_k - s(i,k) e_j with s(0,1) = 1 = -s(1,0)
    u.triple.at(0, 0, 1, 0) = -one;
    u.triple.at(0, 1, 0, 0) = one;
    u.triple.at(1, 0, 1, 1) = -one;
    u.triple.at(1, 1, 0, 1) = one;
    return u;
}

Fkts<Rational> osp() {
    Fkts<Rational> u = zero(1, -1, -1);
    u.triple.at(0, 0, 0, 0) = one;
    return u;
}

Fkts<Rational> jts() {
    Fkts<Rational> u = zero(1, -1, 1);
    u.triple.at(0, 0, 0, 0) = one;
    return u;
}

JTernary<Rational> sp2() {
    JTernary<Rational> s;
    s.sign = 1;
    s.j.space = BasedSpace(1, "a");
    s.j.product = BilinearTensor<Rational>(s.j.space, s.j.space, s.j.space);
    s.j.product.at(0, 0, 0) = one;
    s.j.unit = vec_unit<Rational>(1, 0);
    s.t = BasedSpace(2, "x");
    s.action = BilinearTensor<Rational>(s.j.space, s.t, s.t);
    s.action.at(0, 0, 0) = one;
    s.action.at(0, 1, 1) = one;
    s.angle = BilinearTensor<Rational>(s.t, s.t, s.j.space);
    s.angle.at(0, 1, 0) = one;
    s.angle.at(1, 0, 0) = -one;
    s.triple = fkts_b().triple;
    return s;
}

JTernary<Rational> osp_jt() {
    JTernary<Rational> s;
    s.sign = -1;
    s.j.space = BasedSpace(1, "a");
    s.j.product = BilinearTensor<Rational>(s.j.space, s.j.space, s.j.space);
    s.j.product.at(0, 0, 0) = one;
    s.j.unit = vec_unit<Rational>(1, 0);
    s.t = BasedSpace(1, "x");
    s.action = BilinearTensor<Rational>(s.j.space, s.t, s.t);
    s.action.at(0, 0, 0) = one;
    s.angle = BilinearTensor<Rational>(s.t, s.t, s.j.space);
    s.angle.at(0, 0, 0) = two;
    s.triple = TrilinearTensor<Rational>(s.t, s.t, s.t, s.t);
    s.triple.at(0, 0, 0, 0) = one;
    return s;
}

Dicyclic<Rational> dic_sp2() { return from_jternary(sp2()); }

LieAlgebra<Rational> sl2_algebra() {
    LieAlgebra<Rational> g;
    g.space = BasedSpace(std::vector<std::string>{"H", "E", "F"});
    g.bracket = BilinearTensor<Rational>(g.space, g.space, g.space);
    g.bracket.at(0, 1, 1) = two;
    g.bracket.at(1, 0, 1) = -two;
    g.bracket.at(0, 2, 2) = -two;
    g.bracket.at(2, 0, 2) = two;
    g.bracket.at(1, 2, 0) = one;
    g.bracket.at(2, 1, 0) = -one;
    g.frame = std::array<Vec<Rational>, 3>{vec_unit<Rational>(3, 0), vec_unit<Rational>(3, 1),
                                           vec_unit<Rational>(3, 2)};
    return g;
}

const std::vector<std::string>& names() {
    static const std::vector<std::string> list = {"zero2", "fkts-b", "osp",     "jts",
                                                  "sp2",   "osp-jt", "dic-sp2", "sl2"};
    return list;
}

Json emit(const std::string& name) {
    if (name == "zero2") return to_json(zero(2, 1, 1));
    if (name == "fkts-b") return to_json(fkts_b());
    if (name == "osp") return to_json(osp());
    if (name == "jts") return to_json(jts());
    if (name == "sp2") return to_json(sp2());
    if (name == "osp-jt") return to_json(osp_jt());
    if (name == "dic-sp2") return to_json(dic_sp2());
    if (name == "sl2") return to_json(sl2_algebra());
    throw ParseError("unknown fixture '" + name + "'");
}

} // namespace triplekit::fixtures
