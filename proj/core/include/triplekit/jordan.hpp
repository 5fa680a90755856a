#pragma once

#include "triplekit/axiom.hpp"
#include "triplekit/tensor.hpp"

namespace triplekit {

/// Unital Jordan algebra given by structure constants: commutative product
/// whose full linearized Jordan identity holds (equivalent to
/// (a.a).(b.a) = ((a.a).b).a in characteristic 0).
template <ScalarField K>
struct JordanAlgebra {
    BasedSpace space;
    BilinearTensor<K> product; ///< endomorphic on space
    Vec<K> unit;               ///< coordinates of the multiplicative unit

    std::size_t dim() const { return space.dim(); }

    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const { return product.apply(a, b); }
};

/// Commutativity, two-sided unit, and the fully linearized Jordan identity
///   sum over cyclic (u,v,w) of [ (u.v).(b.w) - ((u.v).b).w ] = 0
/// on all basis 4-tuples (u, v, w, b).
template <ScalarField K>
Report check_jordan(const JordanAlgebra<K>& j) {
    Report r;
    const std::size_t n = j.dim();
    const auto& labels = j.space.labels();

    r.add(check_identity_vec<K>("commutative", TupleSpace{{n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    return std::make_pair(j.product.basis_product(t[0], t[1]),
                                                          j.product.basis_product(t[1], t[0]));
                                },
                                labels));

    r.add(check_identity_vec<K>("unit", TupleSpace{{n}},
                                [&](const std::vector<std::size_t>& t) {
                                    return std::make_pair(j.mul(j.unit, vec_unit<K>(n, t[0])),
                                                          vec_unit<K>(n, t[0]));
                                },
                                labels));

    r.add(check_identity_vec<K>("jordan_identity", TupleSpace{{n, n, n, n}},
                                [&](const std::vector<std::size_t>& t) {
                                    Vec<K> u = vec_unit<K>(n, t[0]), v = vec_unit<K>(n, t[1]),
                                           w = vec_unit<K>(n, t[2]), b = vec_unit<K>(n, t[3]);
                                    auto term = [&](const Vec<K>& p, const Vec<K>& q,
                                                    const Vec<K>& s) {
                                        Vec<K> pq = j.mul(p, q);
                                        return j.mul(pq, j.mul(b, s)) - j.mul(j.mul(pq, b), s);
                                    };
                                    Vec<K> lhs = term(u, v, w) + term(v, w, u) + term(w, u, v);
                                    return std::make_pair(lhs, vec_zero<K>(n));
                                },
                                labels));

    return r;
}

} // namespace triplekit
