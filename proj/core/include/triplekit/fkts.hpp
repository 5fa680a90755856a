#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triplekit/axiom.hpp"
#include "triplekit/liecheck.hpp"
#include "triplekit/linsolve.hpp"
#include "triplekit/tensor.hpp"

namespace triplekit {

/// (eps, delta) Freudenthal-Kantor triple system: a space U with a trilinear
/// product xyz whose operators
///   L(x,y)z = xyz,   K(x,y)z = xzy - delta*yzx
/// satisfy the two Freudenthal-Kantor identities (checked by check_fk):
///   [L(u,v), L(x,y)] = L(L(u,v)x, y) + eps*L(x, L(v,u)y)
///   K(K(u,v)x, y)    = L(y,x)K(u,v) - eps*K(u,v)L(x,y)
template <ScalarField K>
struct Fkts {
    BasedSpace space;
    int eps = 1;
    int delta = 1;
    TrilinearTensor<K> triple;

    std::size_t dim() const { return space.dim(); }

    Matrix<K> l_op(const Vec<K>& x, const Vec<K>& y) const {
        return triple.matrix_fixing_12(x, y);
    }
    Matrix<K> k_op(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> a = triple.matrix_fixing_13(x, y);
        Matrix<K> b = triple.matrix_fixing_13(y, x);
        return delta > 0 ? a - b : a + b;
    }
    Matrix<K> s_op(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> a = l_op(x, y), b = l_op(y, x);
        return eps > 0 ? a + b : a - b;
    }
    Matrix<K> t_op(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> a = l_op(y, x), b = l_op(x, y);
        return eps > 0 ? a - b : a + b;
    }
};

/// Precomputed L(e_i, e_j) and K(e_i, e_j) tables; all the exhaustive sweeps
/// below run off these instead of re-deriving operator matrices per tuple.
template <ScalarField K>
struct FktsOps {
    explicit FktsOps(const Fkts<K>& u) : u_(&u), n_(u.dim()) {
        l_.reserve(n_ * n_);
        k_.reserve(n_ * n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                Vec<K> ei = vec_unit<K>(n_, i), ej = vec_unit<K>(n_, j);
                l_.push_back(u.l_op(ei, ej));
                k_.push_back(u.k_op(ei, ej));
            }
    }

    const Fkts<K>& system() const { return *u_; }
    std::size_t dim() const { return n_; }
    const Matrix<K>& l(std::size_t i, std::size_t j) const { return l_.at(i * n_ + j); }
    const Matrix<K>& k(std::size_t i, std::size_t j) const { return k_.at(i * n_ + j); }

    /// Bilinear extensions over the tables.
    Matrix<K> l_lin(const Vec<K>& x, const Vec<K>& y) const { return combine(l_, x, y); }
    Matrix<K> k_lin(const Vec<K>& x, const Vec<K>& y) const { return combine(k_, x, y); }
    Matrix<K> s_lin(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> a = l_lin(x, y), b = l_lin(y, x);
        return u_->eps > 0 ? a + b : a - b;
    }
    Matrix<K> t_lin(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> a = l_lin(y, x), b = l_lin(x, y);
        return u_->eps > 0 ? a - b : a + b;
    }

  private:
    Matrix<K> combine(const std::vector<Matrix<K>>& table, const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (y[j].is_zero()) continue;
                m = m + (x[i] * y[j]) * table[i * n_ + j];
            }
        }
        return m;
    }

    const Fkts<K>* u_;
    std::size_t n_;
    std::vector<Matrix<K>> l_, k_;
};

/// Input validation: signs in {1,-1} and an endomorphic triple tensor.
template <ScalarField K>
Report check_fkts_structure(const Fkts<K>& u) {
    Report r;
    bool signs = (u.eps == 1 || u.eps == -1) && (u.delta == 1 || u.delta == -1);
    r.add_bool("signs_pm1", signs);
    bool endo = u.triple.s1().dim() == u.dim() && u.triple.s2().dim() == u.dim() &&
                u.triple.s3().dim() == u.dim() && u.triple.out().dim() == u.dim();
    r.add_bool("triple_endomorphic", endo);
    return r;
}

/// The two defining identities, swept over all basis 4-tuples.
template <ScalarField K>
Report check_fk(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    const K eps = K::from_int(u.eps);
    TupleSpace s4{{n, n, n, n}};
    Report r;

    r.add(check_identity_mat<K>("fk1", s4, [&](const std::vector<std::size_t>& t) {
        const Matrix<K>&Luv = ops.l(t[0], t[1]), &Lxy = ops.l(t[2], t[3]);
        Matrix<K> lhs = commutator(Luv, Lxy);
        Matrix<K> rhs = ops.l_lin(Luv.column(t[2]), vec_unit<K>(n, t[3])) +
                        eps * ops.l_lin(vec_unit<K>(n, t[2]), ops.l(t[1], t[0]).column(t[3]));
        return std::make_pair(lhs, rhs);
    }));

    r.add(check_identity_mat<K>("fk2", s4, [&](const std::vector<std::size_t>& t) {
        const Matrix<K>& Kuv = ops.k(t[0], t[1]);
        Matrix<K> lhs = ops.k_lin(Kuv.column(t[2]), vec_unit<K>(n, t[3]));
        Matrix<K> rhs = ops.l(t[3], t[2]) * Kuv - eps * (Kuv * ops.l(t[2], t[3]));
        return std::make_pair(lhs, rhs);
    }));

    return r;
}

/// Bracket identities for S(x,y) = L(x,y) + eps*L(y,x) and
/// T(x,y) = L(y,x) - eps*L(x,y); consequences of the first FK identity.
template <ScalarField K>
Report check_st_identities(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    const K eps = K::from_int(u.eps);
    TupleSpace s4{{n, n, n, n}};
    Report r;

    auto unit = [&](std::size_t i) { return vec_unit<K>(n, i); };

    r.add(check_identity_mat<K>("sl_bracket", s4, [&](const std::vector<std::size_t>& t) {
        Matrix<K> Suv = ops.s_lin(unit(t[0]), unit(t[1]));
        Matrix<K> lhs = commutator(Suv, ops.l(t[2], t[3]));
        Matrix<K> rhs = ops.l_lin(Suv.column(t[2]), unit(t[3])) +
                        ops.l_lin(unit(t[2]), Suv.column(t[3]));
        return std::make_pair(lhs, rhs);
    }));

    r.add(check_identity_mat<K>("tl_bracket", s4, [&](const std::vector<std::size_t>& t) {
        Matrix<K> Tuv = ops.t_lin(unit(t[0]), unit(t[1]));
        Matrix<K> lhs = commutator(Tuv, ops.l(t[2], t[3]));
        Matrix<K> rhs = ops.l_lin(Tuv.column(t[2]), unit(t[3])) -
                        ops.l_lin(unit(t[2]), Tuv.column(t[3]));
        return std::make_pair(lhs, rhs);
    }));

    r.add(check_identity_mat<K>("st_bracket", s4, [&](const std::vector<std::size_t>& t) {
        Matrix<K> Suv = ops.s_lin(unit(t[0]), unit(t[1]));
        Matrix<K> Txy = ops.t_lin(unit(t[2]), unit(t[3]));
        Matrix<K> lhs = commutator(Suv, Txy);
        Matrix<K> rhs = ops.t_lin(Suv.column(t[2]), unit(t[3])) +
                        ops.t_lin(unit(t[2]), Suv.column(t[3]));
        return std::make_pair(lhs, rhs);
    }));

    r.add(check_identity_mat<K>("ts_bracket", s4, [&](const std::vector<std::size_t>& t) {
        Matrix<K> Tuv = ops.t_lin(unit(t[0]), unit(t[1]));
        Matrix<K> Sxy = ops.s_lin(unit(t[2]), unit(t[3]));
        Matrix<K> lhs = commutator(Tuv, Sxy);
        Matrix<K> rhs = eps * (ops.t_lin(unit(t[2]), Tuv.column(t[3])) -
                               ops.t_lin(Tuv.column(t[2]), unit(t[3])));
        return std::make_pair(lhs, rhs);
    }));

    r.add(check_identity_mat<K>("tt_bracket", s4, [&](const std::vector<std::size_t>& t) {
        Matrix<K> Tuv = ops.t_lin(unit(t[0]), unit(t[1]));
        Matrix<K> Txy = ops.t_lin(unit(t[2]), unit(t[3]));
        Matrix<K> lhs = commutator(Tuv, Txy);
        Matrix<K> rhs = eps * (ops.s_lin(unit(t[2]), Tuv.column(t[3])) -
                               ops.s_lin(Tuv.column(t[2]), unit(t[3])));
        return std::make_pair(lhs, rhs);
    }));

    return r;
}

/// Special: K(x,y) = eps*delta*L(y,x) - eps*L(x,y) on all basis pairs.
template <ScalarField K>
CheckResult check_special(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    const K ed = K::from_int(u.eps * u.delta), eps = K::from_int(u.eps);
    return check_identity_mat<K>("special", TupleSpace{{n, n}}, [&](const std::vector<std::size_t>& t) {
        Matrix<K> rhs = ed * ops.l(t[1], t[0]) - eps * ops.l(t[0], t[1]);
        return std::make_pair(ops.k(t[0], t[1]), rhs);
    });
}

template <ScalarField K>
bool is_special(const Fkts<K>& u) {
    return check_special(u).status == CheckStatus::Pass;
}

/// Witness for id in span K(U,U): coefficients over the generators K(e_i,e_j),
/// in the canonical reduced form produced by the span solver.
template <ScalarField K>
struct UnitaryWitness {
    bool unitary = false;
    std::vector<std::pair<std::array<std::size_t, 2>, K>> combination;
};

template <ScalarField K>
UnitaryWitness<K> is_unitary(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    std::vector<Vec<K>> gens;
    gens.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(ops.k(i, j).flatten());
    auto span = span_basis(gens, n * n);
    auto combo = span.expand_in_inputs(Matrix<K>::identity(n).flatten());

    UnitaryWitness<K> w;
    if (!combo) return w;
    w.unitary = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(*combo)[i * n + j].is_zero())
                w.combination.push_back({{i, j}, (*combo)[i * n + j]});
    return w;
}

/// Balanced: K(x,y) = b(x,y)*id for a bilinear form b, returned as a tensor
/// into a one-dimensional space when it exists.
template <ScalarField K>
std::optional<BilinearTensor<K>> is_balanced(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    if (n == 0) return std::nullopt;
    BilinearTensor<K> b(u.space, u.space, BasedSpace({"1"}));
    Matrix<K> id = Matrix<K>::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix<K>& kij = ops.k(i, j);
            K lambda = kij.at(0, 0);
            if (!(kij == lambda * id)) return std::nullopt;
            b.at(i, j, 0) = lambda;
        }
    return b;
}

/// Properties specific to special systems, split by sign pattern:
/// eps == delta: the K-anticommutator identity;
/// eps == -delta: xyz + eps*xzy = 0, every K(x,y) a triple derivation, and
/// the mixed K/T anticommutator identity.
template <ScalarField K>
Report check_prop_ss(const Fkts<K>& u) {
    Report r;
    if (!is_special(u)) {
        r.add_vacuous("prop_ss", "system is not special");
        return r;
    }
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    const K eps = K::from_int(u.eps);
    auto unit = [&](std::size_t i) { return vec_unit<K>(n, i); };
    TupleSpace s4{{n, n, n, n}};

    if (u.eps == u.delta) {
        r.add(check_identity_mat<K>("kk_anticommutator", s4, [&](const std::vector<std::size_t>& t) {
            const Matrix<K>&Kuv = ops.k(t[0], t[1]), &Kxy = ops.k(t[2], t[3]);
            Matrix<K> lhs = Kuv * Kxy + Kxy * Kuv;
            Matrix<K> rhs = ops.k_lin(Kuv.column(t[2]), unit(t[3])) +
                            ops.k_lin(unit(t[2]), Kuv.column(t[3]));
            return std::make_pair(lhs, rhs);
        }));
    } else {
        r.add(check_identity_vec<K>("triple_eps_skew", TupleSpace{{n, n, n}},
                                    [&](const std::vector<std::size_t>& t) {
                                        Vec<K> lhs = u.triple.basis_image(t[0], t[1], t[2]) +
                                                     eps * u.triple.basis_image(t[0], t[2], t[1]);
                                        return std::make_pair(lhs, vec_zero<K>(n));
                                    },
                                    u.space.labels()));

        bool kder = true;
        for (std::size_t i = 0; i < n && kder; ++i)
            for (std::size_t j = 0; j < n && kder; ++j)
                kder = is_triple_derivation(ops.k(i, j), u.triple);
        r.add_bool("k_derivation", kder);

        r.add(check_identity_mat<K>("kt_anticommutator", s4, [&](const std::vector<std::size_t>& t) {
            const Matrix<K>& Kuv = ops.k(t[0], t[1]);
            Matrix<K> Txy = ops.t_lin(unit(t[2]), unit(t[3]));
            Matrix<K> lhs = Kuv * Txy + Txy * Kuv;
            Matrix<K> rhs = ops.k_lin(Kuv.column(t[2]), unit(t[3])) -
                            ops.k_lin(unit(t[2]), Kuv.column(t[3]));
            return std::make_pair(lhs, rhs);
        }));
    }
    return r;
}

/// Two identities tying K(a,b)K(c,d) products back to L-operators; hold in
/// every (eps, delta) system satisfying the FK identities.
template <ScalarField K>
Report check_k_identities(const Fkts<K>& u) {
    FktsOps<K> ops(u);
    const std::size_t n = u.dim();
    const K eps = K::from_int(u.eps), delta = K::from_int(u.delta);
    auto unit = [&](std::size_t i) { return vec_unit<K>(n, i); };
    TupleSpace s4{{n, n, n, n}};
    Report r;

    r.add(check_identity_mat<K>("kk_l_first", s4, [&](const std::vector<std::size_t>& t) {
        const Matrix<K>& Kab = ops.k(t[0], t[1]);
        Matrix<K> lhs = eps * (Kab * ops.k(t[2], t[3])) +
                        ops.l_lin(Kab.column(t[2]), unit(t[3])) -
                        delta * ops.l_lin(Kab.column(t[3]), unit(t[2]));
        return std::make_pair(lhs, Matrix<K>(n, n));
    }));

    r.add(check_identity_mat<K>("kk_l_second", s4, [&](const std::vector<std::size_t>& t) {
        const Matrix<K>& Kab = ops.k(t[0], t[1]);
        Matrix<K> lhs = ops.k(t[2], t[3]) * Kab +
                        delta * ops.l_lin(unit(t[2]), Kab.column(t[3])) -
                        ops.l_lin(unit(t[3]), Kab.column(t[2]));
        return std::make_pair(lhs, Matrix<K>(n, n));
    }));

    return r;
}

/// A nonzero unitary system is forced to have eps == delta and be special.
template <ScalarField K>
Report check_unital_special(const Fkts<K>& u) {
    Report r;
    auto w = is_unitary(u);
    if (!w.unitary || u.dim() == 0) {
        r.add_vacuous("unital_implies_special", "system is not unitary");
        return r;
    }
    r.add_bool("unitary_signs_match", u.eps == u.delta);
    CheckResult sp = check_special(u);
    sp.name = "unitary_special";
    r.add(sp);
    return r;
}

/// Full verification suite for an FKTS input, as run by the CLI.
template <ScalarField K>
Report verify_fkts(const Fkts<K>& u) {
    Report r;
    r.merge("structure", check_fkts_structure(u));
    if (!r.ok()) return r;
    r.merge("fk", check_fk(u));
    r.merge("st", check_st_identities(u));
    r.merge("k_ids", check_k_identities(u));
    r.merge("prop_ss", check_prop_ss(u));
    r.merge("unital", check_unital_special(u));

    r.fact("dim", std::to_string(u.dim()));
    r.fact("epsilon", std::to_string(u.eps));
    r.fact("delta", std::to_string(u.delta));
    r.fact("special", is_special(u) ? "true" : "false");
    auto w = is_unitary(u);
    r.fact("unitary", w.unitary ? "true" : "false");
    if (w.unitary) {
        std::string combo;
        for (const auto& [ij, c] : w.combination) {
            if (!combo.empty()) combo += " + ";
            combo += c.str() + "*K(" + u.space.label(ij[0]) + "," + u.space.label(ij[1]) + ")";
        }
        r.fact("unitary_witness", combo.empty() ? "0" : combo);
    }
    r.fact("balanced", is_balanced(u) ? "true" : "false");
    return r;
}

} // namespace triplekit
