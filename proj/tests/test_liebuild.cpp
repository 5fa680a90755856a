#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "triplekit/fixtures.hpp"
#include "triplekit/io.hpp"
#include "triplekit/liebuild.hpp"

using namespace triplekit;

namespace {

Json fixture_doc(const std::string& name) {
    return load_json_file(std::string(TRIPLEKIT_FIXTURE_DIR) + "/" + name + ".json");
}

std::pair<std::size_t, std::size_t> parity_dims(const BasedSpace& s) {
    std::size_t even = 0, odd = 0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        (s.parity(i) == Parity::Even ? even : odd) += 1;
    return {even, odd};
}

} // namespace

TEST_CASE("module-pair construction: dimension 10, Lie, framed") {
    auto b = build_g_jt(fixtures::sp2());
    CHECK(b.g.dim() == 10);
    CHECK(!b.g.super());
    CHECK(b.nj == 1);
    CHECK(b.nt == 2);
    CHECK(b.nder == 3);
    CHECK(jacobi_defect(b.g.bracket).empty());
    CHECK(verify_lie(b.g).ok());
    REQUIRE(b.g.frame.has_value());

    auto dec = bc1_decompose(b.g);
    CHECK(dec.report.ok());
    CHECK(dec.mult_adjoint == 1);
    CHECK(dec.mult_natural == 2);
    CHECK(dec.mult_trivial == 3);
    CHECK(dec.weight_dims == std::array<std::size_t, 5>{1, 2, 4, 2, 1});
}

TEST_CASE("module-pair construction: super case of dimension (3|2)") {
    auto b = build_g_jt(fixtures::osp_jt());
    CHECK(b.g.dim() == 5);
    CHECK(b.g.super());
    CHECK(b.nder == 0);
    auto [even, odd] = parity_dims(b.g.space);
    CHECK(even == 3);
    CHECK(odd == 2);
    CHECK(jacobi_defect(b.g.bracket, true).empty());
    CHECK(parity_defect(b.g.bracket).empty());
    CHECK(verify_lie(b.g).ok());
}

TEST_CASE("five-graded construction from the dimension-2 system") {
    auto b = build_g_u(fixtures::fkts_b());
    CHECK(b.g.dim() == 10);
    CHECK(!b.g.super());
    CHECK(gu_grade_dims(b) == std::array<std::size_t, 5>{1, 2, 4, 2, 1});
    CHECK(check_gu_grading(b).status == CheckStatus::Pass);
    CHECK(verify_lie(b.g).ok());
}

TEST_CASE("five-graded construction from the super dimension-1 system") {
    auto b = build_g_u(fixtures::osp());
    CHECK(b.g.dim() == 5);
    CHECK(b.g.super()); // delta = -1 marks the column space odd
    auto [even, odd] = parity_dims(b.g.space);
    CHECK(even == 3);
    CHECK(odd == 2);
    CHECK(gu_grade_dims(b) == std::array<std::size_t, 5>{1, 1, 1, 1, 1});
    CHECK(check_gu_grading(b).status == CheckStatus::Pass);
    CHECK(verify_lie(b.g).ok());
}

TEST_CASE("ternary-algebra construction: dimension 10 with an sl2 frame") {
    auto a = fixtures::dic_sp2();
    auto b = build_g_a(a);
    CHECK(b.g.dim() == 10);
    CHECK(b.na == 3);
    CHECK(b.ntau == 4);
    CHECK(jacobi_defect(b.g.bracket).empty());

    auto e = find_unit(a);
    REQUIRE(e.has_value());
    auto frame = ga_frame(a, b, *e);
    auto dec = bc1_decompose(b.g, frame);
    CHECK(dec.report.ok());
    CHECK(dec.mult_adjoint == 1);
    CHECK(dec.mult_natural == 2);
    CHECK(dec.mult_trivial == 3);
    CHECK(dec.weight_dims == std::array<std::size_t, 5>{1, 2, 4, 2, 1});
}

TEST_CASE("plain sl2 decomposes as one adjoint copy") {
    auto g = fixtures::sl2_algebra();
    auto dec = bc1_decompose(g);
    CHECK(dec.report.ok());
    CHECK(dec.mult_adjoint == 1);
    CHECK(dec.mult_natural == 0);
    CHECK(dec.mult_trivial == 0);
}

TEST_CASE("decomposition rejects degenerate frames") {
    auto g = fixtures::sl2_algebra();
    std::array<Vec<Rational>, 3> zero_frame{vec_zero<Rational>(3), vec_zero<Rational>(3),
                                            vec_zero<Rational>(3)};
    auto dec = bc1_decompose(g, zero_frame);
    CHECK(!dec.report.ok());
    const CheckResult* c = dec.report.find("frame_brackets");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::Fail);

    // no frame recorded at all
    auto b = build_g_u(fixtures::fkts_b());
    CHECK(!b.g.frame.has_value());
    CHECK_THROWS_AS(bc1_decompose(b.g), PreconditionError);
}

TEST_CASE("five-graded algebra embeds isomorphically into the module-pair algebra") {
    for (const char* name : {"fkts-b", "osp"}) {
        CAPTURE(name);
        auto u = fkts_from_json<Rational>(fixture_doc(name));
        auto jt = from_special_fkts(u);
        auto gjt = build_g_jt(jt);
        auto gu = build_g_u(u);

        auto emb = embed_gu_in_gjt(u, jt, gjt, gu);
        CHECK(emb.report.ok());
        CHECK(gu.g.dim() == gjt.g.dim()); // bijective: equal dimensions
        CHECK(rank(emb.map) == gu.g.dim());

        // spot-check the homomorphism on a non-basis pair
        if (gu.g.dim() >= 2) {
            Vec<Rational> x = vec_unit<Rational>(gu.g.dim(), 0) + vec_unit<Rational>(gu.g.dim(), 1);
            Vec<Rational> y = vec_unit<Rational>(gu.g.dim(), gu.g.dim() - 1);
            Vec<Rational> lhs = emb.map.apply(gu.g.bra(x, y));
            Vec<Rational> rhs = gjt.g.bra(emb.map.apply(x), emb.map.apply(y));
            CHECK(vec_is_zero(lhs - rhs));
        }
    }
}

TEST_CASE("order-12 group action on the module-pair algebra") {
    auto s = jternary_from_json<Cyc>(fixture_doc("sp2"));
    auto b = build_g_jt(s);
    auto act = dic3_on_gjt(b);
    CHECK(check_dic3_action(b.g, act).ok());

    auto dims = phi_eigenspace_dims(act.phi, Cyc::omega());
    CHECK(dims == std::array<std::size_t, 3>{4, 3, 3});
}

TEST_CASE("order-12 group action on the five-graded algebra") {
    auto u = fkts_from_json<Cyc>(fixture_doc("fkts-b"));
    auto b = build_g_u(u);
    auto act = dic3_on_gu(b);
    CHECK(check_dic3_action(b.g, act).ok());

    // theta has genuine order 4 here (theta^2 = -id on the column space)
    Matrix<Cyc> t2 = act.theta * act.theta;
    CHECK(t2 != Matrix<Cyc>::identity(b.g.dim()));
}

TEST_CASE("the action degenerates to the symmetric group when eps = -delta") {
    auto u = fkts_from_json<Cyc>(fixture_doc("jts"));
    auto b = build_g_u(u);
    auto act = dic3_on_gu(b);
    CHECK(check_dic3_action(b.g, act).ok());
    CHECK(act.theta * act.theta == Matrix<Cyc>::identity(b.g.dim()));
}

TEST_CASE("order-12 group action on the ternary-algebra construction") {
    auto a = dicyclic_from_json<Cyc>(fixture_doc("dic-sp2"));
    auto b = build_g_a(a);
    auto act = dic3_on_ga(a, b);
    CHECK(check_dic3_action(b.g, act).ok());
}

TEST_CASE("eigenspace extraction recovers the ternary algebra from its own Lie algebra") {
    auto s = jternary_from_json<Cyc>(fixture_doc("sp2"));
    auto b = build_g_jt(s);
    auto act = dic3_on_gjt(b);
    Dicyclic<Cyc> extracted = from_lie_with_dic3(b.g, act);
    Dicyclic<Cyc> direct = from_jternary(s);
    REQUIRE(extracted.dim() == direct.dim());
    CHECK(compare_dicyclic(extracted, direct, {0, 1, 2}).ok());
}

TEST_CASE("eigenspace extraction agrees with the direct triple-system construction") {
    auto u = fkts_from_json<Cyc>(fixture_doc("fkts-b"));
    auto b = build_g_u(u);
    auto act = dic3_on_gu(b);
    Dicyclic<Cyc> extracted = from_lie_with_dic3(b.g, act);
    Dicyclic<Cyc> direct = from_fkts_11(u);
    REQUIRE(extracted.dim() == 3);
    REQUIRE(direct.dim() == 3);

    // extracted basis order: column block (dim 2), then lower-corner
    // operators (dim 1); the direct layout lists operators first
    std::vector<std::size_t> to_b = {1, 2, 0};
    CHECK(compare_dicyclic(extracted, direct, to_b).ok());
}

TEST_CASE("construction preconditions") {
    auto s = fixtures::sp2();
    s.triple.at(0, 0, 0, 0) += Rational(1);
    CHECK_THROWS_AS(build_g_jt(s), PreconditionError);

    auto u = fixtures::fkts_b();
    u.triple.at(0, 0, 0, 0) += Rational(1);
    CHECK_THROWS_AS(build_g_u(u), PreconditionError);

    auto a = fixtures::dic_sp2();
    a.triple.at(0, 0, 0, 0) += Rational(1);
    CHECK_THROWS_AS(build_g_a(a), PreconditionError);

    // group actions need the cube root of unity in the scalar field
    auto rb = build_g_jt(fixtures::sp2());
    CHECK_THROWS_AS(dic3_on_gjt(rb), PreconditionError);
}

TEST_CASE("basis labels name their graded origin") {
    auto b = build_g_jt(fixtures::sp2());
    CHECK(b.g.space.label(0) == "H(a0)");
    CHECK(b.g.space.label(b.off_u()) == "u(x0)");
    CHECK(b.g.space.label(b.off_der()) == "d[0]");

    auto gu = build_g_u(fixtures::fkts_b());
    CHECK(gu.g.space.label(0) == "L[0]");
    CHECK(gu.g.space.label(gu.off_kp()) == "K+[0]");
    CHECK(gu.g.space.label(gu.off_km()) == "K-[0]");

    auto ga = build_g_a(fixtures::dic_sp2());
    CHECK(ga.g.space.label(0) == "tau[0]");
}
