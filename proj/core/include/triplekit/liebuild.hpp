#pragma once

#include <array>
#include <string>
#include <vector>

#include "triplekit/dicyclic.hpp"
#include "triplekit/fkts.hpp"
#include "triplekit/jternary.hpp"
#include "triplekit/lie_algebra.hpp"
#include "triplekit/sl2.hpp"

namespace triplekit {

/// Lie (super)algebra sl(V) x J + V x T + inner derivations, built from a
/// J-ternary system.  Basis layout: H x J, E x J, F x J, u x T, v x T,
/// derivation part; the struct keeps the derivation span so elements of the
/// derivation part can be produced from operators later (embeddings).
template <ScalarField K>
struct GjtBuild {
    LieAlgebra<K> g;
    std::size_t nj = 0, nt = 0, nder = 0;
    SelectedBasis<K> der; ///< flattened (nj+nt)^2 operator span

    std::size_t off_h() const { return 0; }
    std::size_t off_e() const { return nj; }
    std::size_t off_f() const { return 2 * nj; }
    std::size_t off_u() const { return 3 * nj; }
    std::size_t off_v() const { return 3 * nj + nt; }
    std::size_t off_der() const { return 3 * nj + 2 * nt; }
};

/// Build the Lie (super)algebra attached to a J-ternary system, with bracket
///   [f x a, g x b] = [f,g] x a.b + 2 tr(fg) D_{a,b}
///   [f x a, w x x] = f(w) x a*x
///   [w1 x x, w2 x y] = gamma_{w1,w2} x <x|y> + (w1|w2) d_{x,y}
///   [D, f x a] = f x D(a),  [D, w x x] = w x D(x),  [D, D'] = DD' - D'D,
/// the V x T part being odd in the sign = -1 (super) case.
template <ScalarField K>
GjtBuild<K> build_g_jt(const JTernary<K>& s, bool check = true) {
    if (check) {
        Report pre;
        pre.merge("structure", check_jt_structure(s));
        pre.merge("axioms", check_jt_axioms(s));
        if (!pre.ok()) throw PreconditionError("build_g_jt: input fails the J-ternary axioms");
    }
    const std::size_t m = s.nj(), n = s.nt(), mn = m + n;
    Sl2Frame<K> fr = sl2_frame<K>();

    GjtBuild<K> b;
    b.nj = m;
    b.nt = n;

    std::vector<Vec<K>> dgens;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            dgens.push_back(s.d_upper(vec_unit<K>(m, p), vec_unit<K>(m, q)).flatten());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = (s.sign == 1 ? x : x + 1); y < n; ++y)
            dgens.push_back(s.d_lower(vec_unit<K>(n, x), vec_unit<K>(n, y)).flatten());
    b.der = select_basis(dgens, mn * mn);
    const std::size_t r = b.der.rank();
    b.nder = r;

    std::vector<Matrix<K>> dermats;
    for (const auto& v : b.der.vectors) {
        Matrix<K> mm(mn, mn);
        for (std::size_t i = 0; i < mn; ++i)
            for (std::size_t j = 0; j < mn; ++j) mm.at(i, j) = v[i * mn + j];
        dermats.push_back(std::move(mm));
    }

    const std::size_t N = 3 * m + 2 * n + r;
    std::vector<std::string> labels;
    labels.reserve(N);
    static const char* sl2_names[3] = {"H", "E", "F"};
    for (std::size_t si = 0; si < 3; ++si)
        for (std::size_t p = 0; p < m; ++p)
            labels.push_back(std::string(sl2_names[si]) + "(" + s.j.space.label(p) + ")");
    static const char* v_names[2] = {"u", "v"};
    for (std::size_t al = 0; al < 2; ++al)
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(std::string(v_names[al]) + "(" + s.t.label(i) + ")");
    for (std::size_t k = 0; k < r; ++k) labels.push_back("d[" + std::to_string(k) + "]");

    std::optional<std::vector<Parity>> par;
    if (s.sign < 0) {
        std::vector<Parity> p(N, Parity::Even);
        for (std::size_t i = 0; i < 2 * n; ++i) p[b.off_u() + i] = Parity::Odd;
        par = std::move(p);
    }
    b.g.space = BasedSpace(std::move(labels), std::move(par));
    b.g.grade_tags.assign(N, "sl2xJ");
    for (std::size_t i = 0; i < 2 * n; ++i) b.g.grade_tags[b.off_u() + i] = "VxT";
    for (std::size_t k = 0; k < r; ++k) b.g.grade_tags[b.off_der() + k] = "der";

    BilinearTensor<K> br(b.g.space, b.g.space, b.g.space);
    auto der_coords = [&](const Matrix<K>& op, const char* what) {
        auto c = b.der.expand(op.flatten());
        if (!c) throw InternalError(std::string("build_g_jt: ") + what +
                                    " left the derivation span");
        return *c;
    };

    const K two = K::from_int(2);
    // sl2 x J against sl2 x J
    for (std::size_t s1 = 0; s1 < 3; ++s1)
        for (std::size_t p = 0; p < m; ++p) {
            const std::size_t g1 = s1 * m + p;
            for (std::size_t s2 = 0; s2 < 3; ++s2) {
                Vec<K> fc = fr.bracket_coords(s1, s2);
                K tr2 = two * fr.trace_pair(s1, s2);
                for (std::size_t q = 0; q < m; ++q) {
                    const std::size_t g2 = s2 * m + q;
                    Vec<K> jp = s.j.product.basis_product(p, q);
                    for (std::size_t si = 0; si < 3; ++si) {
                        if (fc[si].is_zero()) continue;
                        for (std::size_t k = 0; k < m; ++k)
                            if (!jp[k].is_zero()) br.at(g1, g2, si * m + k) += fc[si] * jp[k];
                    }
                    if (!tr2.is_zero()) {
                        Vec<K> dc = der_coords(
                            s.d_upper(vec_unit<K>(m, p), vec_unit<K>(m, q)), "D operator");
                        for (std::size_t k = 0; k < r; ++k)
                            if (!dc[k].is_zero()) br.at(g1, g2, b.off_der() + k) += tr2 * dc[k];
                    }
                }
            }
        }

    // sl2 x J against V x T (and the reverse order)
    for (std::size_t s1 = 0; s1 < 3; ++s1)
        for (std::size_t p = 0; p < m; ++p) {
            const std::size_t g1 = s1 * m + p;
            for (std::size_t al = 0; al < 2; ++al)
                for (std::size_t l = 0; l < n; ++l) {
                    const std::size_t g2 = b.off_u() + al * n + l;
                    Vec<K> act = s.action.basis_product(p, l);
                    for (std::size_t be = 0; be < 2; ++be) {
                        K coef = fr.member(s1).at(be, al);
                        if (coef.is_zero()) continue;
                        for (std::size_t k = 0; k < n; ++k)
                            if (!act[k].is_zero()) {
                                br.at(g1, g2, b.off_u() + be * n + k) += coef * act[k];
                                br.at(g2, g1, b.off_u() + be * n + k) -= coef * act[k];
                            }
                    }
                }
        }

    // V x T against V x T
    for (std::size_t al = 0; al < 2; ++al)
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t g1 = b.off_u() + al * n + l;
            for (std::size_t be = 0; be < 2; ++be) {
                Vec<K> gc = fr.gamma_coords(al, be);
                int fval = (al == be) ? 0 : (al == 0 ? 1 : -1);
                for (std::size_t k2 = 0; k2 < n; ++k2) {
                    const std::size_t g2 = b.off_u() + be * n + k2;
                    Vec<K> ac = s.angle.basis_product(l, k2);
                    for (std::size_t si = 0; si < 3; ++si) {
                        if (gc[si].is_zero()) continue;
                        for (std::size_t k = 0; k < m; ++k)
                            if (!ac[k].is_zero()) br.at(g1, g2, si * m + k) += gc[si] * ac[k];
                    }
                    if (fval != 0) {
                        Vec<K> dc = der_coords(
                            s.d_lower(vec_unit<K>(n, l), vec_unit<K>(n, k2)), "d operator");
                        const K f = K::from_int(fval);
                        for (std::size_t k = 0; k < r; ++k)
                            if (!dc[k].is_zero()) br.at(g1, g2, b.off_der() + k) += f * dc[k];
                    }
                }
            }
        }

    // derivations against everything
    for (std::size_t dr = 0; dr < r; ++dr) {
        const std::size_t g1 = b.off_der() + dr;
        for (std::size_t s2 = 0; s2 < 3; ++s2)
            for (std::size_t p = 0; p < m; ++p) {
                const std::size_t g2 = s2 * m + p;
                Vec<K> img = apply_j(s, dermats[dr], vec_unit<K>(m, p));
                for (std::size_t k = 0; k < m; ++k)
                    if (!img[k].is_zero()) {
                        br.at(g1, g2, s2 * m + k) += img[k];
                        br.at(g2, g1, s2 * m + k) -= img[k];
                    }
            }
        for (std::size_t al = 0; al < 2; ++al)
            for (std::size_t l = 0; l < n; ++l) {
                const std::size_t g2 = b.off_u() + al * n + l;
                Vec<K> img = apply_t(s, dermats[dr], vec_unit<K>(n, l));
                for (std::size_t k = 0; k < n; ++k)
                    if (!img[k].is_zero()) {
                        br.at(g1, g2, b.off_u() + al * n + k) += img[k];
                        br.at(g2, g1, b.off_u() + al * n + k) -= img[k];
                    }
            }
        for (std::size_t ds = 0; ds < r; ++ds) {
            Vec<K> dc = der_coords(commutator(dermats[dr], dermats[ds]), "derivation bracket");
            for (std::size_t k = 0; k < r; ++k)
                if (!dc[k].is_zero()) br.at(g1, b.off_der() + ds, b.off_der() + k) += dc[k];
        }
    }

    b.g.bracket = std::move(br);
    std::array<Vec<K>, 3> frame;
    for (std::size_t si = 0; si < 3; ++si) {
        Vec<K> v(N, K::zero());
        for (std::size_t k = 0; k < m; ++k) v[si * m + k] = s.j.unit[k];
        frame[si] = std::move(v);
    }
    b.g.frame = std::move(frame);

    if (check && !verify_lie(b.g).ok())
        throw InternalError("build_g_jt: constructed bracket fails the Jacobi identity");
    return b;
}

/// Dic3 action on the algebra built by build_g_jt: theta is conjugation by
/// [[0,1],[-1,0]] on the sl(V) and V factors (H -> -H, E -> -F, F -> -E,
/// u -> -v, v -> u), phi by diag(w, w^2) (E -> w^2 E, F -> w F, u -> w u,
/// v -> w^2 v); the derivation part is fixed by both.
template <ScalarField K>
Dic3Action<K> dic3_on_gjt(const GjtBuild<K>& b) {
    if constexpr (!has_omega<K>) {
        throw PreconditionError("dic3_on_gjt: scalar field does not contain w");
    } else {
        const std::size_t N = b.g.dim(), m = b.nj, n = b.nt;
        Dic3Action<K> act{Matrix<K>(N, N), Matrix<K>(N, N)};
        const K w = K::omega(), w2 = K::omega() * K::omega();
        for (std::size_t p = 0; p < m; ++p) {
            act.theta.at(b.off_h() + p, b.off_h() + p) = -K::one();
            act.theta.at(b.off_f() + p, b.off_e() + p) = -K::one();
            act.theta.at(b.off_e() + p, b.off_f() + p) = -K::one();
            act.phi.at(b.off_h() + p, b.off_h() + p) = K::one();
            act.phi.at(b.off_e() + p, b.off_e() + p) = w2;
            act.phi.at(b.off_f() + p, b.off_f() + p) = w;
        }
        for (std::size_t i = 0; i < n; ++i) {
            act.theta.at(b.off_v() + i, b.off_u() + i) = -K::one();
            act.theta.at(b.off_u() + i, b.off_v() + i) = K::one();
            act.phi.at(b.off_u() + i, b.off_u() + i) = w;
            act.phi.at(b.off_v() + i, b.off_v() + i) = w2;
        }
        for (std::size_t k = 0; k < b.nder; ++k) {
            act.theta.at(b.off_der() + k, b.off_der() + k) = K::one();
            act.phi.at(b.off_der() + k, b.off_der() + k) = K::one();
        }
        return act;
    }
}

/// Lie algebra tau(A,A) + iota1(A) + iota2(A) attached to a dicyclic ternary
/// algebra.  Basis layout: tau part (a selected basis of the span of the
/// operators tau(e_i,e_j) = {e_i,e_j,.}), then iota1, then iota2.
template <ScalarField K>
struct GaBuild {
    LieAlgebra<K> g;
    std::size_t na = 0, ntau = 0;
    SelectedBasis<K> tau;                          ///< flattened n x n operators
    std::vector<std::array<std::size_t, 2>> tau_gen; ///< generator pair per tau basis elt

    std::size_t off_tau() const { return 0; }
    std::size_t off_i1() const { return ntau; }
    std::size_t off_i2() const { return ntau + na; }
};

/// Build the Lie algebra of a dicyclic ternary algebra, with bracket
///   [tau(u,v), tau(x,y)] = their commutator as operators,
///   [tau(u,v), iota1(x)] = iota1({u,v,x}),
///   [tau(u,v), iota2(x)] = -iota2({v, bar u, x}),
///   [iota1(x), iota1(y)] = iota2(x*y),
///   [iota2(x), iota2(y)] = iota1(bar(x*y)),
///   [iota1(x), iota2(y)] = tau(x,y).
template <ScalarField K>
GaBuild<K> build_g_a(const Dicyclic<K>& a, bool check = true) {
    if (check) {
        Report pre;
        pre.merge("structure", check_dic_structure(a));
        pre.merge("axioms", check_d_axioms(a));
        if (!pre.ok()) throw PreconditionError("build_g_a: input fails the dicyclic axioms");
    }
    const std::size_t n = a.dim();

    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gens.push_back(a.tau(vec_unit<K>(n, i), vec_unit<K>(n, j)).flatten());

    GaBuild<K> b;
    b.na = n;
    b.tau = select_basis(gens, n * n);
    b.ntau = b.tau.rank();
    for (auto idx : b.tau.chosen) b.tau_gen.push_back({idx / n, idx % n});

    std::vector<Matrix<K>> taumats, sigmamats;
    for (std::size_t p = 0; p < b.ntau; ++p) {
        const auto& v = b.tau.vectors[p];
        Matrix<K> mm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mm.at(i, j) = v[i * n + j];
        taumats.push_back(std::move(mm));
        // sigma(tau(u,v)) = tau(v, bar u), needed for the iota2 action
        auto [gi, gj] = b.tau_gen[p];
        sigmamats.push_back(a.tau(vec_unit<K>(n, gj), a.bar_v(vec_unit<K>(n, gi))));
    }

    const std::size_t N = b.ntau + 2 * n;
    std::vector<std::string> labels;
    for (std::size_t p = 0; p < b.ntau; ++p) labels.push_back("tau[" + std::to_string(p) + "]");
    for (std::size_t i = 0; i < n; ++i) labels.push_back("i1(" + a.space.label(i) + ")");
    for (std::size_t i = 0; i < n; ++i) labels.push_back("i2(" + a.space.label(i) + ")");
    b.g.space = BasedSpace(std::move(labels));
    b.g.grade_tags.assign(N, "tau");
    for (std::size_t i = 0; i < n; ++i) {
        b.g.grade_tags[b.off_i1() + i] = "iota1";
        b.g.grade_tags[b.off_i2() + i] = "iota2";
    }

    BilinearTensor<K> br(b.g.space, b.g.space, b.g.space);
    auto tau_coords = [&](const Matrix<K>& op, const char* what) {
        auto c = b.tau.expand(op.flatten());
        if (!c) throw InternalError(std::string("build_g_a: ") + what +
                                    " left the tau operator span");
        return *c;
    };

    for (std::size_t p = 0; p < b.ntau; ++p) {
        for (std::size_t q = 0; q < b.ntau; ++q) {
            Vec<K> c = tau_coords(commutator(taumats[p], taumats[q]), "tau bracket");
            for (std::size_t k = 0; k < b.ntau; ++k)
                if (!c[k].is_zero()) br.at(p, q, k) += c[k];
        }
        for (std::size_t i = 0; i < n; ++i) {
            Vec<K> img1 = taumats[p].column(i);
            Vec<K> img2 = sigmamats[p].column(i);
            for (std::size_t k = 0; k < n; ++k) {
                if (!img1[k].is_zero()) {
                    br.at(p, b.off_i1() + i, b.off_i1() + k) += img1[k];
                    br.at(b.off_i1() + i, p, b.off_i1() + k) -= img1[k];
                }
                if (!img2[k].is_zero()) {
                    br.at(p, b.off_i2() + i, b.off_i2() + k) -= img2[k];
                    br.at(b.off_i2() + i, p, b.off_i2() + k) += img2[k];
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> st = a.star.basis_product(i, j);
            Vec<K> bst = a.bar_v(st);
            for (std::size_t k = 0; k < n; ++k) {
                if (!st[k].is_zero()) br.at(b.off_i1() + i, b.off_i1() + j, b.off_i2() + k) += st[k];
                if (!bst[k].is_zero())
                    br.at(b.off_i2() + i, b.off_i2() + j, b.off_i1() + k) += bst[k];
            }
            Vec<K> tc = tau_coords(a.tau(vec_unit<K>(n, i), vec_unit<K>(n, j)), "iota bracket");
            for (std::size_t k = 0; k < b.ntau; ++k)
                if (!tc[k].is_zero()) {
                    br.at(b.off_i1() + i, b.off_i2() + j, k) += tc[k];
                    br.at(b.off_i2() + j, b.off_i1() + i, k) -= tc[k];
                }
        }

    b.g.bracket = std::move(br);
    if (check && !verify_lie(b.g).ok())
        throw InternalError("build_g_a: constructed bracket fails the Jacobi identity");
    return b;
}

/// Dic3 action on the algebra built by build_g_a:
/// phi = 1 on tau, w on iota1, w^2 on iota2; theta(tau(x,y)) = -tau(bar y, x),
/// theta(iota1(x)) = iota2(x), theta(iota2(x)) = iota1(bar x).
template <ScalarField K>
Dic3Action<K> dic3_on_ga(const Dicyclic<K>& a, const GaBuild<K>& b) {
    if constexpr (!has_omega<K>) {
        throw PreconditionError("dic3_on_ga: scalar field does not contain w");
    } else {
        const std::size_t N = b.g.dim(), n = b.na;
        Dic3Action<K> act{Matrix<K>(N, N), Matrix<K>(N, N)};
        const K w = K::omega(), w2 = K::omega() * K::omega();

        for (std::size_t p = 0; p < b.ntau; ++p) {
            auto [gi, gj] = b.tau_gen[p];
            Matrix<K> op = a.tau(a.bar_v(vec_unit<K>(n, gj)), vec_unit<K>(n, gi));
            auto c = b.tau.expand((-op).flatten());
            if (!c) throw InternalError("dic3_on_ga: theta left the tau operator span");
            for (std::size_t k = 0; k < b.ntau; ++k) act.theta.at(k, p) = (*c)[k];
            act.phi.at(p, p) = K::one();
        }
        for (std::size_t i = 0; i < n; ++i) {
            act.theta.at(b.off_i2() + i, b.off_i1() + i) = K::one();
            Vec<K> bi = a.bar_v(vec_unit<K>(n, i));
            for (std::size_t k = 0; k < n; ++k)
                if (!bi[k].is_zero()) act.theta.at(b.off_i1() + k, b.off_i2() + i) = bi[k];
            act.phi.at(b.off_i1() + i, b.off_i1() + i) = w;
            act.phi.at(b.off_i2() + i, b.off_i2() + i) = w2;
        }
        return act;
    }
}

/// sl2 frame inside the algebra built by build_g_a, from a unit element e of
/// the input: h = tau(e,e), e = -iota2(e), f = iota1(e).
template <ScalarField K>
std::array<Vec<K>, 3> ga_frame(const Dicyclic<K>& a, const GaBuild<K>& b, const Vec<K>& e) {
    const std::size_t N = b.g.dim(), n = b.na;
    auto c = b.tau.expand(a.tau(e, e).flatten());
    if (!c) throw PreconditionError("ga_frame: tau(e,e) outside the tau operator span");
    std::array<Vec<K>, 3> frame{Vec<K>(N, K::zero()), Vec<K>(N, K::zero()),
                                Vec<K>(N, K::zero())};
    for (std::size_t k = 0; k < b.ntau; ++k) frame[0][k] = (*c)[k];
    for (std::size_t i = 0; i < n; ++i) {
        frame[1][b.off_i2() + i] = -e[i];
        frame[2][b.off_i1() + i] = e[i];
    }
    return frame;
}

/// 5-graded Lie (super)algebra of an (eps, delta) Freudenthal-Kantor triple
/// system: 2x2 operator matrices over End(U) plus the space of column pairs.
/// Basis layout: L part (grade 0), U+ (grade 1), U- (grade -1), K+ (grade 2),
/// K- (grade -2); the column-pair part is odd when delta = -1.
template <ScalarField K>
struct GuBuild {
    LieAlgebra<K> g;
    std::size_t n = 0;
    int eps = 1, delta = 1;
    std::size_t n_l = 0, n_kp = 0, n_km = 0;
    std::vector<Matrix<K>> lmats;  ///< operator part basis as 2n x 2n matrices
    SpanBasis<K> lspan;            ///< span of flattened lmats
    std::vector<int> lkind;                            ///< 0, +2 or -2 per lmats entry
    std::vector<std::array<std::size_t, 2>> lgen;      ///< generating (a,b) pair
    std::vector<int> grades;                           ///< grade per global basis index

    std::size_t off_l() const { return 0; }
    std::size_t off_t() const { return n_l; }
    std::size_t off_kp() const { return n_l + 2 * n; }
    std::size_t off_km() const { return n_l + 2 * n + n_kp; }

    /// Global basis index of operator-part element i (position in lmats).
    std::size_t l_global(std::size_t i) const {
        if (i < n_l) return i;
        if (i < n_l + n_kp) return off_kp() + (i - n_l);
        return off_km() + (i - n_l - n_kp);
    }
};

/// Build the 5-graded algebra of a Freudenthal-Kantor triple system.
/// Generators of the operator part: diag(L(a,b), eps L(b,a)) in grade 0,
/// upper-corner K(a,b) in grade 2, lower-corner K(a,b) in grade -2; the
/// column space contributes grades +-1 and brackets close by the two
/// defining identities.
template <ScalarField K>
GuBuild<K> build_g_u(const Fkts<K>& u, bool check = true) {
    if (check && !check_fk(u).ok())
        throw PreconditionError("build_g_u: FK identities fail on input");
    const std::size_t n = u.dim();
    FktsOps<K> ops(u);
    const K eps = K::from_int(u.eps), delta = K::from_int(u.delta);

    auto put_block = [&](Matrix<K>& big, const Matrix<K>& small, std::size_t ri, std::size_t ci) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) big.at(ri + i, ci + j) = small.at(i, j);
    };
    auto diag_gen = [&](std::size_t i, std::size_t j) {
        Matrix<K> mm(2 * n, 2 * n);
        put_block(mm, ops.l(i, j), 0, 0);
        put_block(mm, eps * ops.l(j, i), n, n);
        return mm;
    };
    auto kp_gen = [&](std::size_t i, std::size_t j) {
        Matrix<K> mm(2 * n, 2 * n);
        put_block(mm, ops.k(i, j), 0, n);
        return mm;
    };
    auto km_gen = [&](std::size_t i, std::size_t j) {
        Matrix<K> mm(2 * n, 2 * n);
        put_block(mm, ops.k(i, j), n, 0);
        return mm;
    };

    GuBuild<K> b;
    b.n = n;
    b.eps = u.eps;
    b.delta = u.delta;

    auto select_block = [&](auto&& gen, int kind) {
        std::vector<Vec<K>> flats;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flats.push_back(gen(i, j).flatten());
        SelectedBasis<K> sel = select_basis(flats, 4 * n * n);
        for (std::size_t p = 0; p < sel.rank(); ++p) {
            const auto& v = sel.vectors[p];
            Matrix<K> mm(2 * n, 2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = 0; j < 2 * n; ++j) mm.at(i, j) = v[i * 2 * n + j];
            b.lmats.push_back(std::move(mm));
            b.lkind.push_back(kind);
            b.lgen.push_back({sel.chosen[p] / n, sel.chosen[p] % n});
        }
        return sel.rank();
    };
    b.n_l = select_block(diag_gen, 0);
    b.n_kp = select_block(kp_gen, 2);
    b.n_km = select_block(km_gen, -2);

    std::vector<Vec<K>> lflats;
    for (const auto& mm : b.lmats) lflats.push_back(mm.flatten());
    b.lspan = span_basis(lflats, 4 * n * n);

    const std::size_t N = b.n_l + 2 * n + b.n_kp + b.n_km;
    std::vector<std::string> labels;
    b.grades.assign(N, 0);
    for (std::size_t p = 0; p < b.n_l; ++p) labels.push_back("L[" + std::to_string(p) + "]");
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("U+(" + u.space.label(i) + ")");
        b.grades[b.off_t() + i] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("U-(" + u.space.label(i) + ")");
        b.grades[b.off_t() + n + i] = -1;
    }
    for (std::size_t p = 0; p < b.n_kp; ++p) {
        labels.push_back("K+[" + std::to_string(p) + "]");
        b.grades[b.off_kp() + p] = 2;
    }
    for (std::size_t p = 0; p < b.n_km; ++p) {
        labels.push_back("K-[" + std::to_string(p) + "]");
        b.grades[b.off_km() + p] = -2;
    }

    std::optional<std::vector<Parity>> par;
    if (u.delta < 0) {
        std::vector<Parity> pp(N, Parity::Even);
        for (std::size_t i = 0; i < 2 * n; ++i) pp[b.off_t() + i] = Parity::Odd;
        par = std::move(pp);
    }
    b.g.space = BasedSpace(std::move(labels), std::move(par));
    b.g.grade_tags.resize(N);
    for (std::size_t i = 0; i < N; ++i) b.g.grade_tags[i] = std::to_string(b.grades[i]);

    auto l_coords = [&](const Matrix<K>& op, const char* what) {
        auto c = b.lspan.expand_in_inputs(op.flatten());
        if (!c) throw InternalError(std::string("build_g_u: ") + what +
                                    " left the operator span");
        return *c;
    };

    BilinearTensor<K> br(b.g.space, b.g.space, b.g.space);
    const std::size_t nl = b.lmats.size();
    for (std::size_t p = 0; p < nl; ++p) {
        const std::size_t g1 = b.l_global(p);
        for (std::size_t q = 0; q < nl; ++q) {
            Vec<K> c = l_coords(commutator(b.lmats[p], b.lmats[q]), "operator bracket");
            for (std::size_t k = 0; k < nl; ++k)
                if (!c[k].is_zero()) br.at(g1, b.l_global(q), b.l_global(k)) += c[k];
        }
        for (std::size_t cidx = 0; cidx < 2 * n; ++cidx) {
            Vec<K> img = b.lmats[p].column(cidx);
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (!img[k].is_zero()) {
                    br.at(g1, b.off_t() + cidx, b.off_t() + k) += img[k];
                    br.at(b.off_t() + cidx, g1, b.off_t() + k) -= img[k];
                }
        }
    }
    // column pairs against column pairs:
    // [(a1;b1),(a2;b2)] = (L(a1,b2) - delta L(a2,b1), delta K(a1,a2);
    //                      -eps K(b1,b2), eps L(b2,a1) - eps delta L(b1,a2))
    for (std::size_t c1 = 0; c1 < 2 * n; ++c1)
        for (std::size_t c2 = 0; c2 < 2 * n; ++c2) {
            Matrix<K> mm(2 * n, 2 * n);
            if (c1 < n && c2 < n) {
                put_block(mm, delta * ops.k(c1, c2), 0, n);
            } else if (c1 < n && c2 >= n) {
                put_block(mm, ops.l(c1, c2 - n), 0, 0);
                put_block(mm, eps * ops.l(c2 - n, c1), n, n);
            } else if (c1 >= n && c2 < n) {
                put_block(mm, (-delta) * ops.l(c2, c1 - n), 0, 0);
                put_block(mm, (-eps * delta) * ops.l(c1 - n, c2), n, n);
            } else {
                put_block(mm, (-eps) * ops.k(c1 - n, c2 - n), n, 0);
            }
            Vec<K> c = l_coords(mm, "column bracket");
            for (std::size_t k = 0; k < nl; ++k)
                if (!c[k].is_zero()) br.at(b.off_t() + c1, b.off_t() + c2, b.l_global(k)) += c[k];
        }

    b.g.bracket = std::move(br);
    if (check && !verify_lie(b.g).ok())
        throw InternalError("build_g_u: constructed bracket fails the Jacobi identity");
    return b;
}

/// Dimensions of the five grades, ordered (-2, -1, 0, 1, 2).
template <ScalarField K>
std::array<std::size_t, 5> gu_grade_dims(const GuBuild<K>& b) {
    std::array<std::size_t, 5> d{};
    for (int gr : b.grades) d[static_cast<std::size_t>(gr + 2)] += 1;
    return d;
}

/// Grade compatibility of the 5-graded bracket: [g_i, g_j] lands in g_{i+j},
/// and vanishes when |i+j| > 2.
template <ScalarField K>
CheckResult check_gu_grading(const GuBuild<K>& b) {
    const std::size_t N = b.g.dim();
    return check_identity_vec<K>(
        "grade_compatibility", TupleSpace{{N, N}},
        [&](const std::vector<std::size_t>& t) {
            int sum = b.grades[t[0]] + b.grades[t[1]];
            Vec<K> img = b.g.bracket.basis_product(t[0], t[1]);
            Vec<K> kept(N, K::zero());
            if (sum >= -2 && sum <= 2)
                for (std::size_t k = 0; k < N; ++k)
                    if (b.grades[k] == sum) kept[k] = img[k];
            return std::make_pair(img, kept);
        },
        b.g.space.labels());
}

/// Dic3 action on the algebra built by build_g_u: phi scales grade i by w^i;
/// theta maps a column pair (a;b) to (-eps b; delta a) and acts on the
/// operator part by conjugation with that map.
template <ScalarField K>
Dic3Action<K> dic3_on_gu(const GuBuild<K>& b) {
    if constexpr (!has_omega<K>) {
        throw PreconditionError("dic3_on_gu: scalar field does not contain w");
    } else {
        const std::size_t N = b.g.dim(), n = b.n;
        Dic3Action<K> act{Matrix<K>(N, N), Matrix<K>(N, N)};
        const K w = K::omega();
        for (std::size_t i = 0; i < N; ++i) {
            K f = K::one();
            for (int t = 0; t < ((b.grades[i] % 3) + 3) % 3; ++t) f *= w;
            act.phi.at(i, i) = f;
        }

        const K eps = K::from_int(b.eps), delta = K::from_int(b.delta);
        Matrix<K> theta_t(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            theta_t.at(i, n + i) = -eps;
            theta_t.at(n + i, i) = delta;
        }
        // theta^2 = -eps*delta on columns, so theta^{-1} = -eps*delta*theta
        Matrix<K> theta_inv = (-eps * delta) * theta_t;
        for (std::size_t c = 0; c < 2 * n; ++c) {
            Vec<K> img = theta_t.column(c);
            for (std::size_t k = 0; k < 2 * n; ++k)
                if (!img[k].is_zero()) act.theta.at(b.off_t() + k, b.off_t() + c) = img[k];
        }
        for (std::size_t p = 0; p < b.lmats.size(); ++p) {
            Matrix<K> conj = theta_t * b.lmats[p] * theta_inv;
            auto c = b.lspan.expand_in_inputs(conj.flatten());
            if (!c) throw InternalError("dic3_on_gu: conjugation left the operator span");
            for (std::size_t k = 0; k < b.lmats.size(); ++k)
                if (!(*c)[k].is_zero()) act.theta.at(b.l_global(k), b.l_global(p)) = (*c)[k];
        }
        return act;
    }
}

/// Injective homomorphism from the 5-graded algebra of a special system with
/// eps = delta into the J-ternary Lie algebra over the recovered Jordan pair:
///   diag(L(a,b), eps L(b,a)) -> -(eps/2) H x K(a,b) - (1/2) d_{a,b}
///   (x;0) -> u x x,  (0;x) -> -(1/2) v x x
///   upper K(a,b) -> -2 E x K(a,b),  lower K(a,b) -> -(1/2) F x K(a,b).
/// The scales are forced: d_{a,b} acts on T as <a|b>* - 2 L(a,b) with
/// <a|b> = -eps K(a,b), so matching [diag, (x;0)] = L(a,b)x needs the -1/2
/// pair, and gamma_{u,v} = -H then fixes the column and corner factors.
template <ScalarField K>
struct GuEmbedding {
    Matrix<K> map; ///< columns: images of the g(U) basis in g(J,T) coordinates
    Report report;
};

template <ScalarField K>
GuEmbedding<K> embed_gu_in_gjt(const Fkts<K>& u, const JTernary<K>& jt, const GjtBuild<K>& gjt,
                               const GuBuild<K>& gu) {
    const std::size_t n = u.dim(), m = jt.nj();
    const std::size_t Ns = gu.g.dim(), Nt = gjt.g.dim();
    FktsOps<K> ops(u);

    GuEmbedding<K> out;
    out.map = Matrix<K>(Nt, Ns);
    Report& r = out.report;

    if (u.eps != u.delta || !is_special(u)) {
        r.add_error("embedding_preconditions", "system is not special with eps = delta");
        return out;
    }

    std::vector<Vec<K>> jops;
    for (std::size_t p = 0; p < m; ++p)
        jops.push_back(jt.act_matrix(vec_unit<K>(m, p)).flatten());
    SpanBasis<K> jspan = span_basis(jops, n * n);
    auto j_coords = [&](const Matrix<K>& op) {
        auto c = jspan.expand_in_inputs(op.flatten());
        if (!c) throw InternalError("embed_gu_in_gjt: operator outside the Jordan span");
        return *c;
    };

    const K mhalf = -(K::one() / K::from_int(2));
    const K heps = K::from_int(u.eps) * mhalf, mtwo = K::from_int(-2);
    bool der_ok = true;
    for (std::size_t p = 0; p < gu.lmats.size(); ++p) {
        const std::size_t col = gu.l_global(p);
        auto [ga, gb] = gu.lgen[p];
        Vec<K> kc = j_coords(ops.k(ga, gb));
        if (gu.lkind[p] == 0) {
            for (std::size_t k = 0; k < m; ++k) out.map.at(gjt.off_h() + k, col) = heps * kc[k];
            auto dc = gjt.der.expand(
                jt.d_lower(vec_unit<K>(n, ga), vec_unit<K>(n, gb)).flatten());
            if (!dc) {
                der_ok = false;
                continue;
            }
            for (std::size_t k = 0; k < gjt.nder; ++k)
                out.map.at(gjt.off_der() + k, col) = mhalf * (*dc)[k];
        } else if (gu.lkind[p] == 2) {
            for (std::size_t k = 0; k < m; ++k) out.map.at(gjt.off_e() + k, col) = mtwo * kc[k];
        } else {
            for (std::size_t k = 0; k < m; ++k) out.map.at(gjt.off_f() + k, col) = mhalf * kc[k];
        }
    }
    r.add_bool("derivation_images_in_span", der_ok);
    for (std::size_t i = 0; i < n; ++i) {
        out.map.at(gjt.off_u() + i, gu.off_t() + i) = K::one();
        out.map.at(gjt.off_v() + i, gu.off_t() + n + i) = mhalf;
    }

    r.add_bool("injective", rank(out.map) == Ns);

    CheckResult hom = check_identity_vec<K>(
        "homomorphism", TupleSpace{{Ns, Ns}},
        [&](const std::vector<std::size_t>& t) {
            Vec<K> lhs = out.map.apply(gu.g.bracket.basis_product(t[0], t[1]));
            Vec<K> rhs = gjt.g.bra(out.map.column(t[0]), out.map.column(t[1]));
            return std::make_pair(lhs, rhs);
        },
        gjt.g.space.labels());
    r.add(hom);
    r.fact("dim_source", std::to_string(Ns));
    r.fact("dim_target", std::to_string(Nt));
    return out;
}

/// Decomposition of a Lie (super)algebra under a distinguished sl2-triple
/// into multiples of the adjoint, natural (two-dimensional) and trivial
/// modules, by exact eigenspace computations for ad h.
template <ScalarField K>
struct Bc1Decomposition {
    Report report;
    std::array<std::size_t, 5> weight_dims{}; ///< eigenspace dims for -2..2
    std::size_t mult_adjoint = 0, mult_natural = 0, mult_trivial = 0;
};

template <ScalarField K>
Bc1Decomposition<K> bc1_decompose(const LieAlgebra<K>& g, const std::array<Vec<K>, 3>& frame) {
    Bc1Decomposition<K> out;
    Report& r = out.report;
    const std::size_t N = g.dim();
    const auto& [h, e, f] = frame;

    const K two = K::from_int(2);
    bool frame_ok = vec_is_zero(g.bra(h, e) - two * e) && vec_is_zero(g.bra(h, f) + two * f) &&
                    vec_is_zero(g.bra(e, f) - h);
    if (frame_ok) {
        // a genuine sl2 triple is 3-dimensional; rules out degenerate (e.g. zero) frames
        SpanBasis<K> fr_span = span_basis(std::vector<Vec<K>>{h, e, f}, N);
        frame_ok = fr_span.rank() == 3;
    }
    r.add_bool("frame_brackets", frame_ok, "[h,e] = 2e, [h,f] = -2f, [e,f] = h; h,e,f independent");
    if (!frame_ok) return out;

    Matrix<K> adh = g.ad(h), ade = g.ad(e), adf = g.ad(f);
    Matrix<K> id = Matrix<K>::identity(N);

    std::vector<std::vector<Vec<K>>> eig(5);
    std::size_t total = 0;
    for (int lam = -2; lam <= 2; ++lam) {
        eig[lam + 2] = kernel(adh - K::from_int(lam) * id);
        out.weight_dims[lam + 2] = eig[lam + 2].size();
        total += eig[lam + 2].size();
    }
    r.add_bool("weights_in_range", total == N,
               total == N ? ""
                          : "ad h eigenvalues outside -2..2 or h not diagonalizable (" +
                                std::to_string(total) + " of " + std::to_string(N) +
                                " dimensions found)");
    if (total != N) return out;

    r.add_bool("paired_weight_dims", out.weight_dims[0] == out.weight_dims[4] &&
                                         out.weight_dims[1] == out.weight_dims[3]);

    bool adj_sep = true;
    if (!eig[0].empty()) {
        Matrix<K> cols = Matrix<K>::from_columns(eig[0]);
        adj_sep = rank(ade * (ade * cols)) == out.weight_dims[4] &&
                  out.weight_dims[4] == eig[0].size();
    } else {
        adj_sep = out.weight_dims[4] == 0;
    }
    r.add_bool("adjoint_ladder", adj_sep, "e^2 maps weight -2 onto weight 2");

    bool nat_sep = true;
    if (!eig[1].empty()) {
        Matrix<K> cols = Matrix<K>::from_columns(eig[1]);
        nat_sep = rank(ade * cols) == out.weight_dims[3] && out.weight_dims[3] == eig[1].size();
    } else {
        nat_sep = out.weight_dims[3] == 0;
    }
    r.add_bool("natural_ladder", nat_sep, "e maps weight -1 onto weight 1");

    Matrix<K> stacked(3 * N, N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            stacked.at(i, j) = adh.at(i, j);
            stacked.at(N + i, j) = ade.at(i, j);
            stacked.at(2 * N + i, j) = adf.at(i, j);
        }
    out.mult_trivial = kernel(stacked).size();
    out.mult_adjoint = out.weight_dims[4];
    out.mult_natural = out.weight_dims[3];
    r.add_bool("zero_weight_splits", out.weight_dims[2] == out.mult_adjoint + out.mult_trivial,
               "dim of weight 0 = adjoint copies + trivial copies");

    r.fact("mult_adjoint", std::to_string(out.mult_adjoint));
    r.fact("mult_natural", std::to_string(out.mult_natural));
    r.fact("mult_trivial", std::to_string(out.mult_trivial));
    return out;
}

template <ScalarField K>
Bc1Decomposition<K> bc1_decompose(const LieAlgebra<K>& g) {
    if (!g.frame) throw PreconditionError("bc1_decompose: no sl2 frame available");
    return bc1_decompose(g, *g.frame);
}

} // namespace triplekit
