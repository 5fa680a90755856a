#pragma once

#include <functional>
#include <string>
#include <vector>

#include "triplekit/fkts.hpp"
#include "triplekit/jordan.hpp"
#include "triplekit/liecheck.hpp"
#include "triplekit/linsolve.hpp"

namespace triplekit {

/// J-ternary algebra (sign = +1) or its variant with symmetric inner product
/// (sign = -1): a unital Jordan algebra J, a special unital Jordan module T,
/// a bilinear form angle: T x T -> J (skew for +1, symmetric for -1) and a
/// trilinear product on T, subject to the six axioms in check_jt_axioms.
template <ScalarField K>
struct JTernary {
    JordanAlgebra<K> j;
    BasedSpace t;
    BilinearTensor<K> action;  ///< J x T -> T,  (a, x) -> a*x
    BilinearTensor<K> angle;   ///< T x T -> J
    TrilinearTensor<K> triple; ///< T x T x T -> T
    int sign = 1;

    std::size_t nj() const { return j.dim(); }
    std::size_t nt() const { return t.dim(); }

    Vec<K> act(const Vec<K>& a, const Vec<K>& x) const { return action.apply(a, x); }
    Vec<K> ang(const Vec<K>& x, const Vec<K>& y) const { return angle.apply(x, y); }
    Vec<K> trip(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
        return triple.apply(x, y, z);
    }

    /// lambda_a: the action of a on T as a matrix.
    Matrix<K> act_matrix(const Vec<K>& a) const { return action.left_matrix(a); }

    /// Combined space J + T (J basis first); T basis odd when sign = -1.
    BasedSpace sum_space() const {
        std::vector<std::string> labels = j.space.labels();
        labels.insert(labels.end(), t.labels().begin(), t.labels().end());
        std::optional<std::vector<Parity>> par;
        if (sign < 0) {
            std::vector<Parity> p(nj(), Parity::Even);
            p.insert(p.end(), nt(), Parity::Odd);
            par = std::move(p);
        }
        return BasedSpace(std::move(labels), std::move(par));
    }

    /// The product (a+x) diamond (b+y) = (a.b + <x|y>) + (a*y + b*x) on J+T.
    BilinearTensor<K> diamond() const {
        BasedSpace s = sum_space();
        BilinearTensor<K> d(s, s, s);
        const std::size_t m = nj();
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t q = 0; q < m; ++q)
                for (std::size_t k = 0; k < m; ++k) d.at(p, q, k) = j.product.at(p, q, k);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t i = 0; i < nt(); ++i)
                for (std::size_t k = 0; k < nt(); ++k) {
                    d.at(p, m + i, m + k) = action.at(p, i, k);
                    d.at(m + i, p, m + k) = action.at(p, i, k);
                }
        for (std::size_t i = 0; i < nt(); ++i)
            for (std::size_t l = 0; l < nt(); ++l)
                for (std::size_t k = 0; k < m; ++k) d.at(m + i, m + l, k) = angle.at(i, l, k);
        return d;
    }

    /// D_{a,b} as an operator on J + T (block diagonal):
    /// on J: c -> a.(b.c) - b.(a.c); on T: x -> (a*(b*x) - b*(a*x))/4.
    Matrix<K> d_upper(const Vec<K>& a, const Vec<K>& b) const {
        const std::size_t m = nj(), n = nt();
        Matrix<K> op(m + n, m + n);
        for (std::size_t k = 0; k < m; ++k) {
            Vec<K> c = vec_unit<K>(m, k);
            Vec<K> img = j.mul(a, j.mul(b, c)) - j.mul(b, j.mul(a, c));
            for (std::size_t i = 0; i < m; ++i) op.at(i, k) = img[i];
        }
        const K quarter = K::one() / K::from_int(4);
        for (std::size_t k = 0; k < n; ++k) {
            Vec<K> x = vec_unit<K>(n, k);
            Vec<K> img = quarter * (act(a, act(b, x)) - act(b, act(a, x)));
            for (std::size_t i = 0; i < n; ++i) op.at(m + i, m + k) = img[i];
        }
        return op;
    }

    /// d_{x,y} as an operator on J + T (block diagonal):
    /// on J: a -> <a*x|y> - <x|a*y>; on T: z -> <x|y>*z - 2<x,y,z>.
    Matrix<K> d_lower(const Vec<K>& x, const Vec<K>& y) const {
        const std::size_t m = nj(), n = nt();
        Matrix<K> op(m + n, m + n);
        for (std::size_t k = 0; k < m; ++k) {
            Vec<K> a = vec_unit<K>(m, k);
            Vec<K> img = ang(act(a, x), y) - ang(x, act(a, y));
            for (std::size_t i = 0; i < m; ++i) op.at(i, k) = img[i];
        }
        Vec<K> xy = ang(x, y);
        const K two = K::from_int(2);
        for (std::size_t k = 0; k < n; ++k) {
            Vec<K> z = vec_unit<K>(n, k);
            Vec<K> img = act(xy, z) - two * trip(x, y, z);
            for (std::size_t i = 0; i < n; ++i) op.at(m + i, m + k) = img[i];
        }
        return op;
    }
};

/// Structural invariants: the Jordan part is a unital Jordan algebra, T is a
/// unital special Jordan module, and the angle form has the symmetry dictated
/// by the sign.
template <ScalarField K>
Report check_jt_structure(const JTernary<K>& s) {
    Report r;
    r.add_bool("sign_pm1", s.sign == 1 || s.sign == -1);
    r.merge("jordan", check_jordan(s.j));

    const std::size_t m = s.nj(), n = s.nt();
    const auto& tl = s.t.labels();

    r.add(check_identity_vec<K>("module_unital", TupleSpace{{n}},
                                [&](const std::vector<std::size_t>& t) {
                                    return std::make_pair(s.act(s.j.unit, vec_unit<K>(n, t[0])),
                                                          vec_unit<K>(n, t[0]));
                                },
                                tl));

    const K half = K::one() / K::from_int(2);
    r.add(check_identity_vec<K>("module_special", TupleSpace{{m, m, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = vec_unit<K>(m, t[0]), b = vec_unit<K>(m, t[1]),
                                           x = vec_unit<K>(n, t[2]);
                                    Vec<K> lhs = s.act(s.j.mul(a, b), x);
                                    Vec<K> rhs = half * (s.act(a, s.act(b, x)) + s.act(b, s.act(a, x)));
                                    return std::make_pair(lhs, rhs);
                                },
                                tl));

    bool sym_ok = (s.sign == 1) ? s.angle.is_skew() : s.angle.is_symmetric();
    r.add_bool("angle_symmetry", sym_ok, s.sign == 1 ? "skew required" : "symmetric required");
    return r;
}

/// The six defining axioms, in the sign = +1 or sign = -1 variant.
/// All are multilinear, so exhaustive basis sweeps decide them.
template <ScalarField K>
Report check_jt_axioms(const JTernary<K>& s) {
    Report r;
    const std::size_t m = s.nj(), n = s.nt();
    const auto& jl = s.j.space.labels();
    const auto& tl = s.t.labels();
    const K half = K::one() / K::from_int(2);
    const bool plus = s.sign == 1;

    auto ju = [&](std::size_t i) { return vec_unit<K>(m, i); };
    auto tu = [&](std::size_t i) { return vec_unit<K>(n, i); };

    r.add(check_identity_vec<K>("jt1", TupleSpace{{m, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), x = tu(t[1]), y = tu(t[2]);
                                    Vec<K> lhs = s.j.mul(a, s.ang(x, y));
                                    Vec<K> rhs = half * (s.ang(s.act(a, x), y) + s.ang(x, s.act(a, y)));
                                    return std::make_pair(lhs, rhs);
                                },
                                jl));

    r.add(check_identity_vec<K>("jt2", TupleSpace{{m, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), x = tu(t[1]), y = tu(t[2]), z = tu(t[3]);
                                    Vec<K> lhs = s.act(a, s.trip(x, y, z));
                                    Vec<K> rhs = s.trip(s.act(a, x), y, z) - s.trip(x, s.act(a, y), z) +
                                                 s.trip(x, y, s.act(a, z));
                                    return std::make_pair(lhs, rhs);
                                },
                                tl));

    r.add(check_identity_vec<K>("jt3", TupleSpace{{n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = tu(t[0]), y = tu(t[1]), z = tu(t[2]);
                                    Vec<K> xzy = s.act(s.ang(x, z), y);
                                    Vec<K> lhs, rhs;
                                    if (plus) { // <x,y,z> = <z,y,x> - <x|z>*y
                                        lhs = s.trip(x, y, z);
                                        rhs = s.trip(z, y, x) - xzy;
                                    } else { // <x,y,z> + <z,y,x> = <x|z>*y
                                        lhs = s.trip(x, y, z) + s.trip(z, y, x);
                                        rhs = xzy;
                                    }
                                    return std::make_pair(lhs, rhs);
                                },
                                tl));

    r.add(check_identity_vec<K>("jt4", TupleSpace{{n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = tu(t[0]), y = tu(t[1]), z = tu(t[2]);
                                    Vec<K> xyz = s.act(s.ang(x, y), z);
                                    Vec<K> lhs, rhs;
                                    if (plus) { // <x,y,z> = <y,x,z> + <x|y>*z
                                        lhs = s.trip(x, y, z);
                                        rhs = s.trip(y, x, z) + xyz;
                                    } else { // <x,y,z> + <y,x,z> = <x|y>*z
                                        lhs = s.trip(x, y, z) + s.trip(y, x, z);
                                        rhs = xyz;
                                    }
                                    return std::make_pair(lhs, rhs);
                                },
                                tl));

    r.add(check_identity_vec<K>("jt5", TupleSpace{{n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = tu(t[0]), y = tu(t[1]), z = tu(t[2]), w = tu(t[3]);
                                    Vec<K> lhs = s.ang(s.trip(x, y, z), w) + s.ang(z, s.trip(x, y, w));
                                    Vec<K> rhs = s.ang(x, s.act(s.ang(z, w), y));
                                    return std::make_pair(lhs, rhs);
                                },
                                jl));

    // <x,y,<z,w,v>> = <<x,y,z>,w,v> -/+ <z,<y,x,w>,v> + <z,w,<x,y,v>>
    // (middle term subtracted in the sign = -1 variant).
    r.add(check_identity_vec<K>("jt6", TupleSpace{{n, n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = tu(t[0]), y = tu(t[1]), z = tu(t[2]), w = tu(t[3]),
                                           v = tu(t[4]);
                                    Vec<K> lhs = s.trip(x, y, s.trip(z, w, v));
                                    Vec<K> mid = s.trip(z, s.trip(y, x, w), v);
                                    Vec<K> rhs = s.trip(s.trip(x, y, z), w, v) +
                                                 (plus ? mid : -mid) + s.trip(z, w, s.trip(x, y, v));
                                    return std::make_pair(lhs, rhs);
                                },
                                tl));

    return r;
}

/// Apply the T-block of an operator on J+T to a T-vector.
template <ScalarField K>
Vec<K> apply_t(const JTernary<K>& s, const Matrix<K>& op, const Vec<K>& x) {
    const std::size_t m = s.nj(), n = s.nt();
    Vec<K> full(m + n, K::zero());
    for (std::size_t i = 0; i < n; ++i) full[m + i] = x[i];
    Vec<K> img = op.apply(full);
    return Vec<K>(img.begin() + m, img.end());
}

/// Apply the J-block of an operator on J+T to a J-vector.
template <ScalarField K>
Vec<K> apply_j(const JTernary<K>& s, const Matrix<K>& op, const Vec<K>& a) {
    const std::size_t m = s.nj();
    Vec<K> full(m + s.nt(), K::zero());
    for (std::size_t i = 0; i < m; ++i) full[i] = a[i];
    Vec<K> img = op.apply(full);
    return Vec<K>(img.begin(), img.begin() + m);
}

/// The derivation/compatibility package behind the Lie constructions: every
/// D_{a,b} and d_{x,y} derives the diamond product, the operators obey their
/// defining formulas, keep the symmetry forced by the sign, and satisfy the
/// four structure equations (sign-dependent in the last one):
///   D_{a.b,c} + D_{b.c,a} + D_{c.a,b} = 0
///   4 D_{a,<x|y>} = -d_{a*x,y} + d_{x,a*y}
///   2 a.<x|y> = <a*x|y> + <x|a*y>
///   +1: d_{x,y}(z) - d_{z,y}(x) = <x|y>*z - <z|y>*x + 2<x|z>*y
///   -1: d_{x,y}(z) - d_{y,z}(x) = <x|y>*z + <y|z>*x - 2<z|x>*y
template <ScalarField K>
Report check_theorem_jt(const JTernary<K>& s) {
    Report r;
    const std::size_t m = s.nj(), n = s.nt();
    BilinearTensor<K> dia = s.diamond();

    auto ju = [&](std::size_t i) { return vec_unit<K>(m, i); };
    auto tu = [&](std::size_t i) { return vec_unit<K>(n, i); };

    std::vector<Matrix<K>> dup(m * m), dlow(n * n);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) dup[a * m + b] = s.d_upper(ju(a), ju(b));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) dlow[x * n + y] = s.d_lower(tu(x), tu(y));

    bool der = true;
    std::string where;
    for (std::size_t i = 0; i < m * m && der; ++i)
        if (auto ce = derivation_defect(dup[i], dia)) {
            der = false;
            where = "D[" + std::to_string(i / m) + "," + std::to_string(i % m) + "]";
        }
    for (std::size_t i = 0; i < n * n && der; ++i)
        if (auto ce = derivation_defect(dlow[i], dia)) {
            der = false;
            where = "d[" + std::to_string(i / n) + "," + std::to_string(i % n) + "]";
        }
    r.add_bool("derivations_of_diamond", der, where);

    bool dskew = true, dsym = true;
    for (std::size_t a = 0; a < m && dskew; ++a)
        for (std::size_t b = 0; b < m && dskew; ++b)
            dskew = (dup[a * m + b] == -dup[b * m + a]);
    for (std::size_t x = 0; x < n && dsym; ++x)
        for (std::size_t y = 0; y < n && dsym; ++y) {
            const Matrix<K>& flip = dlow[y * n + x];
            dsym = (dlow[x * n + y] == (s.sign == 1 ? flip : -flip));
        }
    r.add_bool("D_skew", dskew);
    r.add_bool("d_symmetry", dsym, s.sign == 1 ? "symmetric required" : "skew required");

    const auto& jl = s.j.space.labels();
    const K two = K::from_int(2), four = K::from_int(4);

    r.add(check_identity_mat<K>("D_cyclic", TupleSpace{{m, m, m}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), b = ju(t[1]), c = ju(t[2]);
                                    Matrix<K> lhs = s.d_upper(s.j.mul(a, b), c) +
                                                    s.d_upper(s.j.mul(b, c), a) +
                                                    s.d_upper(s.j.mul(c, a), b);
                                    return std::make_pair(lhs, Matrix<K>(m + n, m + n));
                                }));

    r.add(check_identity_mat<K>("D_angle_vs_d", TupleSpace{{m, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), x = tu(t[1]), y = tu(t[2]);
                                    Matrix<K> lhs = four * s.d_upper(a, s.ang(x, y));
                                    Matrix<K> rhs = s.d_lower(x, s.act(a, y)) -
                                                    s.d_lower(s.act(a, x), y);
                                    return std::make_pair(lhs, rhs);
                                }));

    r.add(check_identity_vec<K>("jordan_vs_angle", TupleSpace{{m, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), x = tu(t[1]), y = tu(t[2]);
                                    Vec<K> lhs = two * s.j.mul(a, s.ang(x, y));
                                    Vec<K> rhs = s.ang(s.act(a, x), y) + s.ang(x, s.act(a, y));
                                    return std::make_pair(lhs, rhs);
                                },
                                jl));

    r.add(check_identity_vec<K>("d_exchange", TupleSpace{{n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = tu(t[0]), y = tu(t[1]), z = tu(t[2]);
                                    Vec<K> lhs, rhs;
                                    if (s.sign == 1) {
                                        lhs = apply_t(s, dlow[t[0] * n + t[1]], z) -
                                              apply_t(s, dlow[t[2] * n + t[1]], x);
                                        rhs = s.act(s.ang(x, y), z) - s.act(s.ang(z, y), x) +
                                              two * s.act(s.ang(x, z), y);
                                    } else {
                                        lhs = apply_t(s, dlow[t[0] * n + t[1]], z) -
                                              apply_t(s, dlow[t[1] * n + t[2]], x);
                                        rhs = s.act(s.ang(x, y), z) + s.act(s.ang(y, z), x) -
                                              two * s.act(s.ang(z, x), y);
                                    }
                                    return std::make_pair(lhs, rhs);
                                },
                                s.t.labels()));

    // The operators really are given by their defining formulas (guards the
    // block assembly in d_upper/d_lower).
    r.add(check_identity_vec<K>("D_action_on_T", TupleSpace{{m, m, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> a = ju(t[0]), b = ju(t[1]), x = tu(t[2]);
                                    Vec<K> lhs = four * apply_t(s, dup[t[0] * m + t[1]], x);
                                    Vec<K> rhs = s.act(a, s.act(b, x)) - s.act(b, s.act(a, x));
                                    return std::make_pair(lhs, rhs);
                                },
                                s.t.labels()));

    return r;
}

/// T with its triple product is an (eps, eps) Freudenthal-Kantor triple
/// system, eps being the sign of the source algebra; the result is special.
template <ScalarField K>
Fkts<K> to_fkts(const JTernary<K>& s, bool check = true) {
    if (check) {
        Report pre;
        pre.merge("structure", check_jt_structure(s));
        pre.merge("axioms", check_jt_axioms(s));
        if (!pre.ok()) throw PreconditionError("to_fkts: input is not a valid J-ternary system");
    }
    Fkts<K> u{s.t, s.sign, s.sign, s.triple};
    if (check) {
        if (!check_fk(u).ok() || !is_special(u))
            throw InternalError("to_fkts: produced system is not a special FK system");
    }
    return u;
}

/// Jordan pair recovered from a special system with eps == delta:
/// J = span{id} + span K(U,U) inside End(U)+ (id listed first, so the Jordan
/// unit is always coordinate (1,0,...,0)), T = U with the natural action,
/// angle = -eps*K, and the original triple.
template <ScalarField K>
JTernary<K> from_special_fkts(const Fkts<K>& u, bool check = true) {
    if (check) {
        if (!check_fk(u).ok())
            throw PreconditionError("from_special_fkts: FK identities fail on input");
        if (!is_special(u)) throw PreconditionError("from_special_fkts: input is not special");
        if (u.eps != u.delta) throw PreconditionError("from_special_fkts: eps != delta");
    }
    const std::size_t n = u.dim();
    FktsOps<K> ops(u);

    std::vector<Vec<K>> gens;
    gens.push_back(Matrix<K>::identity(n).flatten());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(ops.k(i, j).flatten());
    SelectedBasis<K> jb = select_basis(gens, n * n);

    const std::size_t m = jb.rank();
    BasedSpace jspace(m, "a");
    JTernary<K> s;
    s.sign = u.eps;
    s.t = u.space;

    s.j.space = jspace;
    s.j.product = BilinearTensor<K>(jspace, jspace, jspace);
    const K half = K::one() / K::from_int(2);
    auto as_matrix = [&](const Vec<K>& flat) {
        Matrix<K> mm(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mm.at(i, j) = flat[i * n + j];
        return mm;
    };
    std::vector<Matrix<K>> basis_mats;
    for (const auto& v : jb.vectors) basis_mats.push_back(as_matrix(v));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
            Matrix<K> prod = half * (basis_mats[p] * basis_mats[q] + basis_mats[q] * basis_mats[p]);
            auto coords = jb.expand(prod.flatten());
            if (!coords)
                throw InternalError("from_special_fkts: Jordan product left the operator span");
            for (std::size_t k = 0; k < m; ++k) s.j.product.at(p, q, k) = (*coords)[k];
        }
    s.j.unit = vec_unit<K>(m, 0);

    s.action = BilinearTensor<K>(jspace, s.t, s.t);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t jx = 0; jx < n; ++jx) {
            Vec<K> img = basis_mats[p].column(jx);
            for (std::size_t k = 0; k < n; ++k) s.action.at(p, jx, k) = img[k];
        }

    s.angle = BilinearTensor<K>(s.t, s.t, jspace);
    const K meps = K::from_int(-u.eps);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto coords = jb.expand((meps * ops.k(x, y)).flatten());
            if (!coords) throw InternalError("from_special_fkts: K(x,y) outside the operator span");
            for (std::size_t k = 0; k < m; ++k) s.angle.at(x, y, k) = (*coords)[k];
        }

    s.triple = u.triple;

    if (check) {
        Report post;
        post.merge("structure", check_jt_structure(s));
        post.merge("axioms", check_jt_axioms(s));
        if (!post.ok())
            throw InternalError("from_special_fkts: reconstructed pair fails the JT axioms");
    }
    return s;
}

/// Triple product recovered from graded data by
/// <x,y,z> = (-(d_{x,y})(z) + <x|y>*z) / 2, where d(i,j) supplies the
/// operator d_{e_i,e_j} restricted to T.
template <ScalarField K>
TrilinearTensor<K> triple_from_graded(const BilinearTensor<K>& action,
                                      const BilinearTensor<K>& angle,
                                      const std::function<Matrix<K>(std::size_t, std::size_t)>& d) {
    const BasedSpace& t = angle.lhs();
    const std::size_t n = t.dim();
    TrilinearTensor<K> triple(t, t, t, t);
    const K half = K::one() / K::from_int(2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<K> dij = d(i, j);
            Vec<K> aij = angle.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec<K> img = half * (action.apply(aij, vec_unit<K>(n, k)) - dij.column(k));
                for (std::size_t l = 0; l < n; ++l) triple.at(i, j, k, l) = img[l];
            }
        }
    return triple;
}

/// Compare two systems that share the module T, identifying their Jordan
/// parts through the faithful operator picture: psi maps each J-basis
/// element of `a` to the coordinates (over the J-basis of `b`) of the same
/// operator lambda_a on T.  Checks psi is bijective and carries product,
/// unit, angle and action across; triples must agree on the nose.
template <ScalarField K>
Report compare_jt_via_action(const JTernary<K>& a, const JTernary<K>& b) {
    Report r;
    if (a.nt() != b.nt()) {
        r.add_error("module_dims", "T dimensions differ");
        return r;
    }
    const std::size_t n = a.nt(), ma = a.nj(), mb = b.nj();

    r.add_bool("triple_equal", a.triple.same_coefficients(b.triple));
    r.add_bool("sign_equal", a.sign == b.sign);

    std::vector<Vec<K>> bops;
    for (std::size_t q = 0; q < mb; ++q)
        bops.push_back(b.act_matrix(vec_unit<K>(mb, q)).flatten());
    auto bspan = span_basis(bops, n * n);

    Matrix<K> psi(mb, ma);
    bool embedded = true;
    for (std::size_t p = 0; p < ma && embedded; ++p) {
        auto coords = bspan.expand_in_inputs(a.act_matrix(vec_unit<K>(ma, p)).flatten());
        if (!coords) {
            embedded = false;
            break;
        }
        for (std::size_t q = 0; q < mb; ++q) psi.at(q, p) = (*coords)[q];
    }
    r.add_bool("j_operators_match", embedded);
    if (!embedded) return r;

    bool bijective = (ma == mb) && rank(psi) == ma;
    r.add_bool("j_bijective", bijective);
    if (!bijective) return r;

    auto map_j = [&](const Vec<K>& v) { return psi.apply(v); };

    r.add(check_identity_vec<K>("unit_match", TupleSpace{{1}},
                                [&](const std::vector<std::size_t>&) {
                                    return std::make_pair(map_j(a.j.unit), b.j.unit);
                                },
                                b.j.space.labels()));

    r.add(check_identity_vec<K>("product_match", TupleSpace{{ma, ma}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> u = vec_unit<K>(ma, t[0]), v = vec_unit<K>(ma, t[1]);
                                    return std::make_pair(map_j(a.j.mul(u, v)),
                                                          b.j.mul(map_j(u), map_j(v)));
                                },
                                b.j.space.labels()));

    r.add(check_identity_vec<K>("angle_match", TupleSpace{{n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    return std::make_pair(map_j(a.angle.basis_product(t[0], t[1])),
                                                          b.angle.basis_product(t[0], t[1]));
                                },
                                b.j.space.labels()));

    r.add(check_identity_vec<K>("action_match", TupleSpace{{ma, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> x = vec_unit<K>(n, t[1]);
                                    return std::make_pair(
                                        a.act(vec_unit<K>(ma, t[0]), x),
                                        b.act(map_j(vec_unit<K>(ma, t[0])), x));
                                },
                                b.t.labels()));

    return r;
}

/// Full verification suite for a J-ternary input, as run by the CLI.
template <ScalarField K>
Report verify_jternary(const JTernary<K>& s) {
    Report r;
    r.merge("structure", check_jt_structure(s));
    if (!r.ok()) return r;
    r.merge("axioms", check_jt_axioms(s));
    r.merge("theorem", check_theorem_jt(s));
    r.fact("dim_J", std::to_string(s.nj()));
    r.fact("dim_T", std::to_string(s.nt()));
    r.fact("sign", std::to_string(s.sign));
    return r;
}

} // namespace triplekit
