#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triplekit/axiom.hpp"
#include "triplekit/tensor.hpp"

namespace triplekit {

namespace detail {
inline int parity_sign(Parity x, Parity y) {
    return (x == Parity::Odd && y == Parity::Odd) ? -1 : 1;
}
} // namespace detail

/// For a graded bracket: pairs (i, j) where [e_i, e_j] has a component of the
/// wrong parity (|[x,y]| must equal |x|+|y|).  Empty when ungraded.
template <ScalarField K>
std::vector<std::array<std::size_t, 2>> parity_defect(const BilinearTensor<K>& bracket) {
    std::vector<std::array<std::size_t, 2>> bad;
    const BasedSpace& s = bracket.out();
    if (!s.graded()) return bad;
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto want = (s.parity(i) == s.parity(j)) ? Parity::Even : Parity::Odd;
            for (std::size_t k = 0; k < n; ++k)
                if (!bracket.at(i, j, k).is_zero() && s.parity(k) != want) {
                    bad.push_back({i, j});
                    break;
                }
        }
    return bad;
}

/// Failing basis triples (i, j, k), lexicographically sorted, of the
/// (super-)Jacobi identity; the (super-)anticommutativity of the pair (i, j)
/// is folded into the triple check, so the list is empty exactly when both
/// hold on all basis tuples.  Signs come from the declared basis parities
/// when super is set:
///   [x,y] = -(-1)^{|x||y|}[y,x],
///   [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]].
template <ScalarField K>
std::vector<std::array<std::size_t, 3>> jacobi_defect(const BilinearTensor<K>& bracket,
                                                      bool super = false) {
    const BasedSpace& s = bracket.out();
    if (bracket.lhs().dim() != s.dim() || bracket.rhs().dim() != s.dim())
        throw DimError("jacobi_defect: bracket must be endomorphic");
    const std::size_t n = s.dim();

    auto sgn = [&](std::size_t i, std::size_t j) -> int {
        return super ? detail::parity_sign(s.parity(i), s.parity(j)) : 1;
    };

    TupleSpace space{{n, n, n}};
    auto failures = sweep_all_failures<bool>(space.total(), [&](std::size_t idx) -> std::optional<bool> {
        auto t = space.decode(idx);
        std::size_t i = t[0], j = t[1], k = t[2];

        Vec<K> eij = bracket.basis_product(i, j);
        Vec<K> anti = bracket.basis_product(j, i);
        if (sgn(i, j) < 0) anti = -anti;
        if (!vec_is_zero(eij + anti)) return true;

        Vec<K> lhs = bracket.apply(vec_unit<K>(n, i), bracket.basis_product(j, k));
        Vec<K> rhs = bracket.apply(eij, vec_unit<K>(n, k));
        Vec<K> second = bracket.apply(vec_unit<K>(n, j), bracket.basis_product(i, k));
        if (sgn(i, j) < 0) second = -second;
        if (lhs != rhs + second) return true;
        return std::nullopt;
    });

    std::vector<std::array<std::size_t, 3>> defect;
    defect.reserve(failures.size());
    for (const auto& [idx, unused] : failures) {
        auto t = space.decode(idx);
        defect.push_back({t[0], t[1], t[2]});
    }
    return defect;
}

/// First basis pair where m fails the Leibniz rule for the given product,
/// m(x*y) = m(x)*y + x*m(y), or nullopt if m is a derivation.
template <ScalarField K>
std::optional<Counterexample> derivation_defect(const Matrix<K>& m,
                                                const BilinearTensor<K>& product) {
    const std::size_t n = product.out().dim();
    if (product.lhs().dim() != n || product.rhs().dim() != n || m.rows() != n || m.cols() != n)
        throw DimError("derivation_defect: endomorphic product and matching map required");
    TupleSpace space{{n, n}};
    auto fail = sweep_first_failure<Counterexample>(space.total(), [&](std::size_t idx) -> std::optional<Counterexample> {
        auto t = space.decode(idx);
        Vec<K> lhs = m.apply(product.basis_product(t[0], t[1]));
        Vec<K> rhs = product.apply(m.column(t[0]), vec_unit<K>(n, t[1])) +
                     product.apply(vec_unit<K>(n, t[0]), m.column(t[1]));
        if (lhs == rhs) return std::nullopt;
        return Counterexample{t, vec_str_labeled(lhs, product.out().labels()),
                              vec_str_labeled(rhs, product.out().labels()), ""};
    });
    return fail ? std::optional<Counterexample>(std::move(fail->second)) : std::nullopt;
}

template <ScalarField K>
bool is_derivation(const Matrix<K>& m, const BilinearTensor<K>& product) {
    return !derivation_defect(m, product).has_value();
}

/// Leibniz rule over a triple product:
/// m(xyz) = (m x)yz + x(m y)z + xy(m z) on all basis triples.
template <ScalarField K>
bool is_triple_derivation(const Matrix<K>& m, const TrilinearTensor<K>& triple) {
    const std::size_t n = triple.out().dim();
    if (triple.s1().dim() != n || triple.s2().dim() != n || triple.s3().dim() != n ||
        m.rows() != n || m.cols() != n)
        throw DimError("is_triple_derivation: endomorphic triple and matching map required");
    TupleSpace space{{n, n, n}};
    auto fail = sweep_first_failure<bool>(space.total(), [&](std::size_t idx) -> std::optional<bool> {
        auto t = space.decode(idx);
        Vec<K> ei = vec_unit<K>(n, t[0]), ej = vec_unit<K>(n, t[1]), ek = vec_unit<K>(n, t[2]);
        Vec<K> lhs = m.apply(triple.basis_image(t[0], t[1], t[2]));
        Vec<K> rhs = triple.apply(m.column(t[0]), ej, ek) + triple.apply(ei, m.column(t[1]), ek) +
                     triple.apply(ei, ej, m.column(t[2]));
        if (lhs == rhs) return std::nullopt;
        return true;
    });
    return !fail.has_value();
}

} // namespace triplekit
