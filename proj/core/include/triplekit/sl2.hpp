#pragma once

#include <array>

#include "triplekit/linsolve.hpp"
#include "triplekit/matrix.hpp"

namespace triplekit {

/// The fixed rank-1 frame used by every construction here: the 2x2 matrices
///   H = diag(1,-1), E = [[0,1],[0,0]], F = [[0,0],[1,0]]
/// acting on V = span{u, v} (u = first, v = second basis vector), with the
/// symplectic form (u|v) = 1 and the symmetrized products
/// gamma_{w1,w2} = (w1|.)w2 + (w2|.)w1 in sl(V).
template <ScalarField K>
struct Sl2Frame {
    Matrix<K> H, E, F;
    Matrix<K> sympl; ///< Gram matrix of (.|.): (x|y) = x^T * sympl * y

    const Matrix<K>& member(std::size_t i) const {
        switch (i) {
            case 0: return H;
            case 1: return E;
            default: return F;
        }
    }

    K form(const Vec<K>& x, const Vec<K>& y) const {
        K r = K::zero();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) r += x[i] * sympl.at(i, j) * y[j];
        return r;
    }

    /// gamma_{w1,w2} as a 2x2 matrix: w -> (w1|w)w2 + (w2|w)w1.
    Matrix<K> gamma(const Vec<K>& w1, const Vec<K>& w2) const {
        Matrix<K> g(2, 2);
        for (std::size_t j = 0; j < 2; ++j) {
            Vec<K> ej = vec_unit<K>(2, j);
            Vec<K> img = form(w1, ej) * w2 + form(w2, ej) * w1;
            for (std::size_t i = 0; i < 2; ++i) g.at(i, j) = img[i];
        }
        return g;
    }

    /// Coordinates of [member(i), member(j)] in the (H, E, F) basis:
    /// [H,E] = 2E, [H,F] = -2F, [E,F] = H.
    Vec<K> bracket_coords(std::size_t i, std::size_t j) const {
        static constexpr int table[3][3][3] = {
            {{0, 0, 0}, {0, 2, 0}, {0, 0, -2}},
            {{0, -2, 0}, {0, 0, 0}, {1, 0, 0}},
            {{0, 0, 2}, {-1, 0, 0}, {0, 0, 0}},
        };
        Vec<K> c(3, K::zero());
        for (std::size_t k = 0; k < 3; ++k) c[k] = K::from_int(table[i][j][k]);
        return c;
    }

    /// trace(member(i) * member(j)): trace(H^2) = 2, trace(EF) = trace(FE) = 1.
    K trace_pair(std::size_t i, std::size_t j) const {
        return (member(i) * member(j)).trace();
    }

    /// Coordinates of gamma over basis vectors of V in the (H, E, F) basis:
    /// gamma_{u,u} = 2E, gamma_{u,v} = gamma_{v,u} = -H, gamma_{v,v} = -2F.
    Vec<K> gamma_coords(std::size_t a, std::size_t b) const {
        Vec<K> c(3, K::zero());
        if (a == 0 && b == 0) c[1] = K::from_int(2);
        else if (a == 1 && b == 1) c[2] = K::from_int(-2);
        else c[0] = K::from_int(-1);
        return c;
    }
};

template <ScalarField K>
Sl2Frame<K> sl2_frame() {
    Sl2Frame<K> f;
    f.H = Matrix<K>(2, 2);
    f.H.at(0, 0) = K::one();
    f.H.at(1, 1) = -K::one();
    f.E = Matrix<K>(2, 2);
    f.E.at(0, 1) = K::one();
    f.F = Matrix<K>(2, 2);
    f.F.at(1, 0) = K::one();
    f.sympl = Matrix<K>(2, 2);
    f.sympl.at(0, 1) = K::one();
    f.sympl.at(1, 0) = -K::one();
    return f;
}

} // namespace triplekit
