#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "triplekit/liecheck.hpp"
#include "triplekit/linsolve.hpp"
#include "triplekit/report.hpp"
#include "triplekit/tensor.hpp"

namespace triplekit {

/// Lie algebra (or superalgebra, when the space is graded) given by structure
/// constants.  `grade_tags` optionally annotates each basis vector with the
/// name of the graded piece it was built in; `frame` optionally records the
/// coordinates of a distinguished sl2-triple (h, e, f).
template <ScalarField K>
struct LieAlgebra {
    BasedSpace space;
    BilinearTensor<K> bracket;
    std::vector<std::string> grade_tags;
    std::optional<std::array<Vec<K>, 3>> frame; ///< h, e, f

    std::size_t dim() const { return space.dim(); }
    bool super() const { return space.graded(); }

    Vec<K> bra(const Vec<K>& x, const Vec<K>& y) const { return bracket.apply(x, y); }

    /// ad(x): y -> [x, y].
    Matrix<K> ad(const Vec<K>& x) const { return bracket.left_matrix(x); }
};

/// Antisymmetry (with parity signs when graded) and the Jacobi identity, via
/// exhaustive basis sweeps; plus parity compatibility of the bracket.
template <ScalarField K>
Report verify_lie(const LieAlgebra<K>& g) {
    Report r;
    bool endo = g.bracket.lhs() == g.space && g.bracket.rhs() == g.space &&
                g.bracket.out() == g.space;
    r.add_bool("bracket_endomorphic", endo);
    if (!endo) return r;

    if (g.super()) {
        auto bad = parity_defect(g.bracket);
        if (bad.empty())
            r.add_pass("bracket_parity");
        else
            r.add_fail("bracket_parity",
                       Counterexample{{bad[0][0], bad[0][1]}, "", "",
                                      "bracket of " + g.space.label(bad[0][0]) + ", " +
                                          g.space.label(bad[0][1]) + " mixes parities"});
    }

    auto bad = jacobi_defect(g.bracket, g.super());
    if (bad.empty()) {
        r.add_pass(g.super() ? "super_jacobi" : "jacobi");
    } else {
        const auto& t = bad[0];
        r.add_fail(g.super() ? "super_jacobi" : "jacobi",
                   Counterexample{{t[0], t[1], t[2]}, "", "",
                                  "fails on (" + g.space.label(t[0]) + ", " + g.space.label(t[1]) +
                                      ", " + g.space.label(t[2]) + ")"});
    }
    return r;
}

/// Does the invertible matrix m preserve the bracket on all basis pairs?
/// Returns the first failing pair if not.
template <ScalarField K>
std::optional<Counterexample> automorphism_defect(const LieAlgebra<K>& g, const Matrix<K>& m) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> lhs = m.apply(g.bracket.basis_product(i, j));
            Vec<K> rhs = g.bra(m.column(i), m.column(j));
            if (!(vec_is_zero(lhs - rhs)))
                return Counterexample{{i, j}, vec_str_labeled(lhs, g.space.labels()),
                                      vec_str_labeled(rhs, g.space.labels()), ""};
        }
    return std::nullopt;
}

/// Action of the order-12 dicyclic group on a Lie algebra: generators
/// theta (order 4) and phi (order 3) with phi * theta * phi = theta.
template <ScalarField K>
struct Dic3Action {
    Matrix<K> theta;
    Matrix<K> phi;
};

/// Generator relations plus both generators being bracket automorphisms.
template <ScalarField K>
Report check_dic3_action(const LieAlgebra<K>& g, const Dic3Action<K>& act) {
    Report r;
    const std::size_t n = g.dim();
    Matrix<K> id = Matrix<K>::identity(n);

    Matrix<K> t2 = act.theta * act.theta;
    r.add_bool("theta_order_divides_4", t2 * t2 == id);
    r.add_bool("phi_order_divides_3", act.phi * act.phi * act.phi == id);
    r.add_bool("braid_relation", act.phi * act.theta * act.phi == act.theta);

    auto td = automorphism_defect(g, act.theta);
    if (!td)
        r.add_pass("theta_automorphism");
    else
        r.add_fail("theta_automorphism", *td);
    auto pd = automorphism_defect(g, act.phi);
    if (!pd)
        r.add_pass("phi_automorphism");
    else
        r.add_fail("phi_automorphism", *pd);

    r.add_bool("theta_invertible", rank(act.theta) == n);
    r.add_bool("phi_invertible", rank(act.phi) == n);
    return r;
}

/// Dimensions of the eigenspaces of phi for eigenvalues 1, w, w^2
/// (only meaningful over the field containing w).
template <ScalarField K>
std::array<std::size_t, 3> phi_eigenspace_dims(const Matrix<K>& phi, const K& omega) {
    const std::size_t n = phi.rows();
    Matrix<K> id = Matrix<K>::identity(n);
    K w2 = omega * omega;
    return {kernel(phi - id).size(),
            kernel(phi - omega * id).size(),
            kernel(phi - w2 * id).size()};
}

} // namespace triplekit
