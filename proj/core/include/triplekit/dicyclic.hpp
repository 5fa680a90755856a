#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplekit/fkts.hpp"
#include "triplekit/jternary.hpp"
#include "triplekit/lie_algebra.hpp"

namespace triplekit {

/// Dicyclic ternary algebra: a space with an involutive automorphism
/// x -> bar(x), an anticommutative binary product x*y and a triple product
/// {x,y,z}, subject to the five axioms in check_d_axioms.
template <ScalarField K>
struct Dicyclic {
    BasedSpace space;
    Matrix<K> bar;
    BilinearTensor<K> star;
    TrilinearTensor<K> triple;

    std::size_t dim() const { return space.dim(); }

    Vec<K> bar_v(const Vec<K>& x) const { return bar.apply(x); }
    Vec<K> star_v(const Vec<K>& x, const Vec<K>& y) const { return star.apply(x, y); }
    Vec<K> trip_v(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
        return triple.apply(x, y, z);
    }

    /// tau(u,v): z -> {u,v,z}.
    Matrix<K> tau(const Vec<K>& u, const Vec<K>& v) const {
        return triple.matrix_fixing_12(u, v);
    }
};

/// Eigenspace bases of the involution: even = fixed vectors, odd = negated.
template <ScalarField K>
struct BarSplit {
    std::vector<Vec<K>> even, odd;
    SpanBasis<K> even_span, odd_span;
};

template <ScalarField K>
BarSplit<K> bar_split(const Dicyclic<K>& a) {
    const std::size_t n = a.dim();
    Matrix<K> id = Matrix<K>::identity(n);
    BarSplit<K> s;
    s.even = kernel(a.bar - id);
    s.odd = kernel(a.bar + id);
    if (s.even.size() + s.odd.size() != n)
        throw PreconditionError("involution eigenspaces do not span the algebra");
    s.even_span = span_basis(s.even, n);
    s.odd_span = span_basis(s.odd, n);
    return s;
}

/// Structural invariants: bar is an involutive automorphism of both products
/// and the binary product is anticommutative.
template <ScalarField K>
Report check_dic_structure(const Dicyclic<K>& a) {
    Report r;
    const std::size_t n = a.dim();
    bool endo = a.star.lhs() == a.space && a.star.rhs() == a.space && a.star.out() == a.space &&
                a.triple.s1() == a.space && a.triple.s2() == a.space &&
                a.triple.s3() == a.space && a.triple.out() == a.space &&
                a.bar.rows() == n && a.bar.cols() == n;
    r.add_bool("products_endomorphic", endo);
    if (!endo) return r;

    r.add_bool("bar_involutive", a.bar * a.bar == Matrix<K>::identity(n));
    r.add_bool("star_anticommutative", a.star.is_skew());

    auto unit = [&](std::size_t i) { return vec_unit<K>(n, i); };
    const auto& lab = a.space.labels();

    r.add(check_identity_vec<K>("bar_star_automorphism", TupleSpace{{n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = unit(t[0]), y = unit(t[1]);
                                    return std::make_pair(a.bar_v(a.star_v(x, y)),
                                                          a.star_v(a.bar_v(x), a.bar_v(y)));
                                },
                                lab));

    r.add(check_identity_vec<K>("bar_triple_automorphism", TupleSpace{{n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = unit(t[0]), y = unit(t[1]), z = unit(t[2]);
                                    return std::make_pair(
                                        a.bar_v(a.trip_v(x, y, z)),
                                        a.trip_v(a.bar_v(x), a.bar_v(y), a.bar_v(z)));
                                },
                                lab));
    return r;
}

/// The five defining axioms, swept exhaustively over basis tuples
/// (3, 4, 4, 4 and 5 free variables respectively).
template <ScalarField K>
Report check_d_axioms(const Dicyclic<K>& a) {
    Report r;
    const std::size_t n = a.dim();
    auto unit = [&](std::size_t i) { return vec_unit<K>(n, i); };
    const auto& lab = a.space.labels();

    // {x,z,y} - {y,z,x} = (bar x * bar y) * bar z
    r.add(check_identity_vec<K>("d1", TupleSpace{{n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = unit(t[0]), y = unit(t[1]), z = unit(t[2]);
                                    Vec<K> lhs = a.trip_v(x, z, y) - a.trip_v(y, z, x);
                                    Vec<K> rhs = a.star_v(a.star_v(a.bar_v(x), a.bar_v(y)), a.bar_v(z));
                                    return std::make_pair(lhs, rhs);
                                },
                                lab));

    // {u, bar v, x*y} + {v,u,x}*y + x*{v,u,y} = 0
    r.add(check_identity_vec<K>("d2", TupleSpace{{n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> u = unit(t[0]), v = unit(t[1]), x = unit(t[2]),
                                           y = unit(t[3]);
                                    Vec<K> lhs = a.trip_v(u, a.bar_v(v), a.star_v(x, y)) +
                                                 a.star_v(a.trip_v(v, u, x), y) +
                                                 a.star_v(x, a.trip_v(v, u, y));
                                    return std::make_pair(lhs, vec_zero<K>(n));
                                },
                                lab));

    // {x,y*z,w} + {y,z*x,w} + {z,x*y,w} = 0
    r.add(check_identity_vec<K>("d3", TupleSpace{{n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = unit(t[0]), y = unit(t[1]), z = unit(t[2]),
                                           w = unit(t[3]);
                                    Vec<K> lhs = a.trip_v(x, a.star_v(y, z), w) +
                                                 a.trip_v(y, a.star_v(z, x), w) +
                                                 a.trip_v(z, a.star_v(x, y), w);
                                    return std::make_pair(lhs, vec_zero<K>(n));
                                },
                                lab));

    // {bar x * bar y, z, w} + {bar y * bar z, x, w} + {bar z * bar x, y, w} = 0
    r.add(check_identity_vec<K>("d4", TupleSpace{{n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> bx = a.bar_v(unit(t[0])), by = a.bar_v(unit(t[1])),
                                           bz = a.bar_v(unit(t[2])), w = unit(t[3]);
                                    Vec<K> lhs = a.trip_v(a.star_v(bx, by), unit(t[2]), w) +
                                                 a.trip_v(a.star_v(by, bz), unit(t[0]), w) +
                                                 a.trip_v(a.star_v(bz, bx), unit(t[1]), w);
                                    return std::make_pair(lhs, vec_zero<K>(n));
                                },
                                lab));

    // {u,v,{x,y,z}} = {{u,v,x},y,z} - {x,{v,bar u,y},z} + {x,y,{u,v,z}}
    r.add(check_identity_vec<K>("d5", TupleSpace{{n, n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> u = unit(t[0]), v = unit(t[1]), x = unit(t[2]),
                                           y = unit(t[3]), z = unit(t[4]);
                                    Vec<K> lhs = a.trip_v(u, v, a.trip_v(x, y, z));
                                    Vec<K> rhs = a.trip_v(a.trip_v(u, v, x), y, z) -
                                                 a.trip_v(x, a.trip_v(v, a.bar_v(u), y), z) +
                                                 a.trip_v(x, y, a.trip_v(u, v, z));
                                    return std::make_pair(lhs, rhs);
                                },
                                lab));
    return r;
}

/// Unit conditions for an even element e: {e,e,a} = -2a on the even part,
/// {e,e,x} = x and {x,e,e} = 0 on the odd part; plus the compatibility
/// conditions (e*a = 0 and symmetry of {a,e,b} on the even part) that make
/// the recovered product a unital Jordan one.
template <ScalarField K>
Report check_unit(const Dicyclic<K>& a, const Vec<K>& e) {
    Report r;
    BarSplit<K> sp = bar_split(a);
    const K two = K::from_int(2);

    r.add_bool("unit_even", vec_is_zero(a.bar_v(e) - e));
    r.add_bool("unit_nonzero", !vec_is_zero(e));

    bool on_even = true, on_odd = true, right_zero = true, star_zero = true, sym = true;
    for (const auto& b : sp.even) {
        if (!vec_is_zero(a.trip_v(e, e, b) + two * b)) on_even = false;
        if (!vec_is_zero(a.star_v(e, b))) star_zero = false;
    }
    for (const auto& x : sp.odd) {
        if (!vec_is_zero(a.trip_v(e, e, x) - x)) on_odd = false;
        if (!vec_is_zero(a.trip_v(x, e, e))) right_zero = false;
    }
    for (const auto& b : sp.even)
        for (const auto& c : sp.even)
            if (!vec_is_zero(a.trip_v(b, e, c) - a.trip_v(c, e, b))) sym = false;

    r.add_bool("tau_ee_minus2_on_even", on_even);
    r.add_bool("tau_ee_identity_on_odd", on_odd);
    r.add_bool("tau_xee_zero_on_odd", right_zero);
    r.add_bool("star_e_even_zero", star_zero);
    r.add_bool("sandwich_symmetric_on_even", sym);
    return r;
}

template <ScalarField K>
bool is_unit(const Dicyclic<K>& a, const Vec<K>& e) {
    return check_unit(a, e).ok();
}

/// First even-part basis vector satisfying the unit conditions, if any.
template <ScalarField K>
std::optional<Vec<K>> find_unit(const Dicyclic<K>& a) {
    BarSplit<K> sp = bar_split(a);
    for (const auto& e : sp.even)
        if (is_unit(a, e)) return e;
    return std::nullopt;
}

/// Consequences of the unit conditions, worth checking independently:
/// the even part star-annihilates itself, triples mixing even and odd in the
/// first two slots vanish, (x*e)*e = x on the odd part, and the double
/// sandwich {e,{e,a,e},e} = 4a on the even part.
template <ScalarField K>
Report check_unit_lemmas(const Dicyclic<K>& a, const Vec<K>& e) {
    Report r;
    BarSplit<K> sp = bar_split(a);
    const std::size_t n = a.dim();
    const K four = K::from_int(4);

    bool even_star = true;
    for (const auto& b : sp.even)
        for (const auto& c : sp.even)
            if (!vec_is_zero(a.star_v(b, c))) even_star = false;
    r.add_bool("even_star_even_zero", even_star);

    bool mixed = true;
    for (const auto& b : sp.even)
        for (const auto& x : sp.odd)
            for (std::size_t w = 0; w < n && mixed; ++w) {
                Vec<K> ew = vec_unit<K>(n, w);
                if (!vec_is_zero(a.trip_v(b, x, ew)) || !vec_is_zero(a.trip_v(x, b, ew)))
                    mixed = false;
            }
    r.add_bool("mixed_triples_zero", mixed);

    bool star_e_inv = true;
    for (const auto& x : sp.odd)
        if (!vec_is_zero(a.star_v(a.star_v(x, e), e) - x)) star_e_inv = false;
    r.add_bool("star_e_involutive_on_odd", star_e_inv);

    bool sandwich = true;
    for (const auto& b : sp.even)
        if (!vec_is_zero(a.trip_v(e, a.trip_v(e, b, e), e) - four * b)) sandwich = false;
    r.add_bool("double_sandwich_4a", sandwich);
    return r;
}

/// Full verification suite for a dicyclic input, as run by the CLI.
template <ScalarField K>
Report verify_dicyclic(const Dicyclic<K>& a) {
    Report r;
    r.merge("structure", check_dic_structure(a));
    if (!r.ok()) return r;
    r.merge("axioms", check_d_axioms(a));
    r.fact("dim", std::to_string(a.dim()));
    BarSplit<K> sp = bar_split(a);
    r.fact("dim_even", std::to_string(sp.even.size()));
    r.fact("dim_odd", std::to_string(sp.odd.size()));
    auto e = find_unit(a);
    r.fact("unit", e ? vec_str_labeled(*e, a.space.labels()) : "none found");
    return r;
}

/// Exact equality of two dicyclic algebras after renumbering the basis of
/// the first: index i of `a` corresponds to index to_b[i] of `b`.
template <ScalarField K>
Report compare_dicyclic(const Dicyclic<K>& a, const Dicyclic<K>& b,
                        const std::vector<std::size_t>& to_b) {
    Report r;
    const std::size_t n = a.dim();
    if (n != b.dim() || to_b.size() != n) {
        r.add_error("dimensions", "dimension mismatch (" + std::to_string(n) + " vs " +
                                      std::to_string(b.dim()) + ")");
        return r;
    }
    bool bar_ok = true, star_ok = true, trip_ok = true;
    for (std::size_t i = 0; i < n && bar_ok; ++i)
        for (std::size_t j = 0; j < n && bar_ok; ++j)
            bar_ok = a.bar.at(i, j) == b.bar.at(to_b[i], to_b[j]);
    for (std::size_t i = 0; i < n && star_ok; ++i)
        for (std::size_t j = 0; j < n && star_ok; ++j)
            for (std::size_t k = 0; k < n && star_ok; ++k)
                star_ok = a.star.at(i, j, k) == b.star.at(to_b[i], to_b[j], to_b[k]);
    for (std::size_t i = 0; i < n && trip_ok; ++i)
        for (std::size_t j = 0; j < n && trip_ok; ++j)
            for (std::size_t k = 0; k < n && trip_ok; ++k)
                for (std::size_t l = 0; l < n && trip_ok; ++l)
                    trip_ok =
                        a.triple.at(i, j, k, l) == b.triple.at(to_b[i], to_b[j], to_b[k], to_b[l]);
    r.add_bool("bar_match", bar_ok);
    r.add_bool("star_match", star_ok);
    r.add_bool("triple_match", trip_ok);
    return r;
}

/// A = J + T with bar = id on J, -id on T, and products
///   a*b = 0, a*x = -x*a = -a.x, x*y = -2<x|y>,
///   {a,x,w} = 0 = {x,a,w},
///   {a,b,c} = -2((ab)c + a(bc) - (ac)b), {a,b,x} = b.(a.x),
///   {x,y,a} = -2<a.x|y>, {x,y,z} = 2<x,y,z>.
template <ScalarField K>
Dicyclic<K> from_jternary(const JTernary<K>& s, bool check = true) {
    if (check) {
        if (s.sign != 1)
            throw PreconditionError("from_jternary: only defined for the sign = +1 variant");
        Report pre;
        pre.merge("structure", check_jt_structure(s));
        pre.merge("axioms", check_jt_axioms(s));
        if (!pre.ok()) throw PreconditionError("from_jternary: input fails the J-ternary axioms");
    }
    const std::size_t m = s.nj(), n = s.nt(), N = m + n;
    std::vector<std::string> labels = s.j.space.labels();
    labels.insert(labels.end(), s.t.labels().begin(), s.t.labels().end());

    Dicyclic<K> a;
    a.space = BasedSpace(std::move(labels));
    a.bar = Matrix<K>(N, N);
    for (std::size_t i = 0; i < m; ++i) a.bar.at(i, i) = K::one();
    for (std::size_t i = 0; i < n; ++i) a.bar.at(m + i, m + i) = -K::one();

    const K two = K::from_int(2);
    a.star = BilinearTensor<K>(a.space, a.space, a.space);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                a.star.at(p, m + i, m + k) = -s.action.at(p, i, k);
                a.star.at(m + i, p, m + k) = s.action.at(p, i, k);
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                a.star.at(m + i, m + j, k) = -two * s.angle.at(i, j, k);

    a.triple = TrilinearTensor<K>(a.space, a.space, a.space, a.space);
    auto ju = [&](std::size_t i) { return vec_unit<K>(m, i); };
    auto tu = [&](std::size_t i) { return vec_unit<K>(n, i); };
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            for (std::size_t rr = 0; rr < m; ++rr) {
                Vec<K> bvec = ju(p), cvec = ju(q), dvec = ju(rr);
                Vec<K> img = -two * (s.j.mul(s.j.mul(bvec, cvec), dvec) +
                                     s.j.mul(bvec, s.j.mul(cvec, dvec)) -
                                     s.j.mul(s.j.mul(bvec, dvec), cvec));
                for (std::size_t k = 0; k < m; ++k) a.triple.at(p, q, rr, k) = img[k];
            }
            for (std::size_t i = 0; i < n; ++i) {
                Vec<K> img = s.act(ju(q), s.act(ju(p), tu(i)));
                for (std::size_t k = 0; k < n; ++k) a.triple.at(p, q, m + i, m + k) = img[k];
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < m; ++p) {
                Vec<K> img = -two * s.ang(s.act(ju(p), tu(i)), tu(j));
                for (std::size_t k = 0; k < m; ++k) a.triple.at(m + i, m + j, p, k) = img[k];
            }
            for (std::size_t l = 0; l < n; ++l) {
                Vec<K> img = two * s.trip(tu(i), tu(j), tu(l));
                for (std::size_t k = 0; k < n; ++k) a.triple.at(m + i, m + j, m + l, m + k) = img[k];
            }
        }

    if (check) {
        Report post;
        post.merge("structure", check_dic_structure(a));
        post.merge("axioms", check_d_axioms(a));
        Vec<K> e(N, K::zero());
        for (std::size_t i = 0; i < m; ++i) e[i] = s.j.unit[i];
        post.merge("unit", check_unit(a, e));
        if (!post.ok()) throw InternalError("from_jternary: produced algebra fails the axioms");
    }
    return a;
}

/// Inverse of from_jternary relative to a unit e: the even part becomes the
/// Jordan algebra with a.b = -{a,e,b}/2 and unit e, the odd part the module
/// with a.x = {a,e,x}, <x|y> = -(e*x)*(e*y)/2 and <x,y,z> = -{x,e*y,z}/2.
template <ScalarField K>
JTernary<K> to_jternary(const Dicyclic<K>& a, const Vec<K>& e, bool check = true) {
    if (check) {
        Report pre;
        pre.merge("structure", check_dic_structure(a));
        pre.merge("axioms", check_d_axioms(a));
        pre.merge("unit", check_unit(a, e));
        if (!pre.ok())
            throw PreconditionError("to_jternary: input is not a dicyclic algebra with unit");
    }
    BarSplit<K> sp = bar_split(a);
    const std::size_t m = sp.even.size(), n = sp.odd.size();
    const K half = K::one() / K::from_int(2);

    JTernary<K> s;
    s.sign = 1;
    s.j.space = BasedSpace(m, "a");
    s.t = BasedSpace(n, "x");

    auto even_coords = [&](const Vec<K>& v, const char* what) {
        auto c = sp.even_span.expand_in_inputs(v);
        if (!c) throw InternalError(std::string("to_jternary: ") + what + " left the even part");
        return *c;
    };
    auto odd_coords = [&](const Vec<K>& v, const char* what) {
        auto c = sp.odd_span.expand_in_inputs(v);
        if (!c) throw InternalError(std::string("to_jternary: ") + what + " left the odd part");
        return *c;
    };

    s.j.product = BilinearTensor<K>(s.j.space, s.j.space, s.j.space);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Vec<K> c = even_coords(-half * a.trip_v(sp.even[p], e, sp.even[q]), "Jordan product");
            for (std::size_t k = 0; k < m; ++k) s.j.product.at(p, q, k) = c[k];
        }
    s.j.unit = even_coords(e, "unit");

    s.action = BilinearTensor<K>(s.j.space, s.t, s.t);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i) {
            Vec<K> c = odd_coords(a.trip_v(sp.even[p], e, sp.odd[i]), "module action");
            for (std::size_t k = 0; k < n; ++k) s.action.at(p, i, k) = c[k];
        }

    s.angle = BilinearTensor<K>(s.t, s.t, s.j.space);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> c = even_coords(
                -half * a.star_v(a.star_v(e, sp.odd[i]), a.star_v(e, sp.odd[j])), "inner product");
            for (std::size_t k = 0; k < m; ++k) s.angle.at(i, j, k) = c[k];
        }

    s.triple = TrilinearTensor<K>(s.t, s.t, s.t, s.t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                Vec<K> c = odd_coords(
                    -half * a.trip_v(sp.odd[i], a.star_v(e, sp.odd[j]), sp.odd[l]), "triple");
                for (std::size_t k = 0; k < n; ++k) s.triple.at(i, j, l, k) = c[k];
            }

    if (check) {
        Report post;
        post.merge("structure", check_jt_structure(s));
        post.merge("axioms", check_jt_axioms(s));
        if (!post.ok()) throw InternalError("to_jternary: recovered pair fails the JT axioms");
    }
    return s;
}

/// A = span K(U,U) + U for a (1,1) Freudenthal-Kantor triple system, with
/// bar = id on the operator part and -id on U, and
///   M1*M2 = 0, M*x = Mx, x1*x2 = -K(x1,x2),
///   {M1,M2,M3} = -(M1 M2 M3 + M3 M2 M1), {M1,M2,x} = M2 M1 x,
///   {x1,x2,M} = K(M x1, x2), {x1,x2,x3} = x1x2x3, mixed slots zero.
template <ScalarField K>
Dicyclic<K> from_fkts_11(const Fkts<K>& u, bool check = true) {
    if (check) {
        if (u.eps != 1 || u.delta != 1)
            throw PreconditionError("from_fkts_11: requires eps = delta = 1");
        if (!check_fk(u).ok())
            throw PreconditionError("from_fkts_11: FK identities fail on input");
    }
    const std::size_t n = u.dim();
    FktsOps<K> ops(u);

    std::vector<Vec<K>> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(ops.k(i, j).flatten());
    SelectedBasis<K> kb = select_basis(gens, n * n);
    const std::size_t m = kb.rank();

    std::vector<Matrix<K>> kmat;
    for (const auto& v : kb.vectors) {
        Matrix<K> mm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mm.at(i, j) = v[i * n + j];
        kmat.push_back(std::move(mm));
    }

    std::vector<std::string> labels;
    for (std::size_t p = 0; p < m; ++p) labels.push_back("K" + std::to_string(p));
    labels.insert(labels.end(), u.space.labels().begin(), u.space.labels().end());

    Dicyclic<K> a;
    a.space = BasedSpace(std::move(labels));
    const std::size_t N = m + n;
    a.bar = Matrix<K>(N, N);
    for (std::size_t i = 0; i < m; ++i) a.bar.at(i, i) = K::one();
    for (std::size_t i = 0; i < n; ++i) a.bar.at(m + i, m + i) = -K::one();

    auto op_coords = [&](const Matrix<K>& op, const char* what) {
        auto c = kb.expand(op.flatten());
        if (!c) throw InternalError(std::string("from_fkts_11: ") + what +
                                    " left the operator span");
        return *c;
    };

    a.star = BilinearTensor<K>(a.space, a.space, a.space);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t i = 0; i < n; ++i) {
            Vec<K> img = kmat[p].column(i);
            for (std::size_t k = 0; k < n; ++k) {
                a.star.at(p, m + i, m + k) = img[k];
                a.star.at(m + i, p, m + k) = -img[k];
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> c = op_coords(-ops.k(i, j), "x*y");
            for (std::size_t k = 0; k < m; ++k) a.star.at(m + i, m + j, k) = c[k];
        }

    a.triple = TrilinearTensor<K>(a.space, a.space, a.space, a.space);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            for (std::size_t rr = 0; rr < m; ++rr) {
                Matrix<K> prod = kmat[p] * kmat[q] * kmat[rr] + kmat[rr] * kmat[q] * kmat[p];
                Vec<K> c = op_coords(-prod, "{M,M,M}");
                for (std::size_t k = 0; k < m; ++k) a.triple.at(p, q, rr, k) = c[k];
            }
            for (std::size_t i = 0; i < n; ++i) {
                Vec<K> img = (kmat[q] * kmat[p]).column(i);
                for (std::size_t k = 0; k < n; ++k) a.triple.at(p, q, m + i, m + k) = img[k];
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < m; ++p) {
                Vec<K> c = op_coords(ops.k_lin(kmat[p].column(i), vec_unit<K>(n, j)), "{x,y,M}");
                for (std::size_t k = 0; k < m; ++k) a.triple.at(m + i, m + j, p, k) = c[k];
            }
            for (std::size_t l = 0; l < n; ++l) {
                Vec<K> img = u.triple.basis_image(i, j, l);
                for (std::size_t k = 0; k < n; ++k) a.triple.at(m + i, m + j, m + l, m + k) = img[k];
            }
        }

    if (check) {
        Report post;
        post.merge("structure", check_dic_structure(a));
        post.merge("axioms", check_d_axioms(a));
        if (!post.ok()) throw InternalError("from_fkts_11: produced algebra fails the axioms");
    }
    return a;
}

/// Extraction from a Lie algebra with a verified dicyclic group action over a
/// field containing w: on the w-eigenspace of phi, set bar(x) = theta^2(x),
/// x*y = theta^3([x,y]) and {x,y,z} = [[x, theta(y)], z].
template <ScalarField K>
Dicyclic<K> from_lie_with_dic3(const LieAlgebra<K>& g, const Dic3Action<K>& act,
                               bool check = true) {
    if constexpr (!has_omega<K>) {
        throw PreconditionError("from_lie_with_dic3: scalar field does not contain w");
    } else {
        if (check) {
            if (!verify_lie(g).ok())
                throw PreconditionError("from_lie_with_dic3: input is not a Lie algebra");
            if (!check_dic3_action(g, act).ok())
                throw PreconditionError("from_lie_with_dic3: group action fails its relations");
        }
        const std::size_t N = g.dim();
        const K w = K::omega();
        std::vector<Vec<K>> basis = kernel(act.phi - w * Matrix<K>::identity(N));
        const std::size_t n = basis.size();
        SpanBasis<K> span = span_basis(basis, N);

        auto coords = [&](const Vec<K>& v, const char* what) {
            auto c = span.expand_in_inputs(v);
            if (!c) throw InternalError(std::string("from_lie_with_dic3: ") + what +
                                        " left the w-eigenspace");
            return *c;
        };

        Matrix<K> theta3 = act.theta * act.theta * act.theta;
        Matrix<K> theta2 = act.theta * act.theta;

        Dicyclic<K> a;
        a.space = BasedSpace(n, "w");
        a.bar = Matrix<K>(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            Vec<K> c = coords(theta2.apply(basis[i]), "bar");
            for (std::size_t k = 0; k < n; ++k) a.bar.at(k, i) = c[k];
        }

        a.star = BilinearTensor<K>(a.space, a.space, a.space);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> c = coords(theta3.apply(g.bra(basis[i], basis[j])), "x*y");
                for (std::size_t k = 0; k < n; ++k) a.star.at(i, j, k) = c[k];
            }

        a.triple = TrilinearTensor<K>(a.space, a.space, a.space, a.space);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> inner = act.theta.apply(basis[j]);
                Vec<K> xi = g.bra(basis[i], inner);
                for (std::size_t l = 0; l < n; ++l) {
                    Vec<K> c = coords(g.bra(xi, basis[l]), "{x,y,z}");
                    for (std::size_t k = 0; k < n; ++k) a.triple.at(i, j, l, k) = c[k];
                }
            }

        if (check) {
            Report post;
            post.merge("structure", check_dic_structure(a));
            post.merge("axioms", check_d_axioms(a));
            if (!post.ok())
                throw InternalError("from_lie_with_dic3: extracted algebra fails the axioms");
        }
        return a;
    }
}

} // namespace triplekit
