#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "triplekit/matrix.hpp"
#include "triplekit/vec.hpp"

namespace triplekit {

namespace detail {

inline mpz_class denom_lcm_entry(const Rational& x) { return x.den(); }
inline mpz_class denom_lcm_entry(const Cyc& x) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.a().den().get_mpz_t(), x.b().den().get_mpz_t());
    return l;
}

template <ScalarField K>
K scalar_from_mpz(const mpz_class& z) {
    return K(Rational(mpq_class(z)));
}
template <>
inline Rational scalar_from_mpz<Rational>(const mpz_class& z) {
    return Rational(mpq_class(z));
}

/// Multiply the row by the lcm of its denominators so all entries become
/// integral (denominator 1 in each rational coefficient).
template <ScalarField K>
void scale_row_integral(Vec<K>& row) {
    mpz_class l(1);
    for (const auto& x : row) {
        mpz_class d = denom_lcm_entry(x);
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (l == 1) return;
    K f = scalar_from_mpz<K>(l);
    for (auto& x : row) x *= f;
}

/// In-place reduced row echelon form, eliminating only on the first
/// main_cols columns; extra columns ride along (augmented system).
///
/// The forward pass is fraction-free (Bareiss): after clearing row
/// denominators, every intermediate entry is a minor of the integral input,
/// so the division by the previous pivot is exact and coefficients stay
/// polynomial-sized instead of blowing up.  The back substitution then
/// normalizes pivots to 1 with exact field division.
template <ScalarField K>
std::vector<std::size_t> rref_in_place(std::vector<Vec<K>>& rows, std::size_t main_cols) {
    const std::size_t m = rows.size();
    for (auto& row : rows) scale_row_integral(row);

    std::vector<std::size_t> pivots;
    K prev = K::one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < main_cols && r < m; ++c) {
        std::size_t p = r;
        while (p < m && rows[p][c].is_zero()) ++p;
        if (p == m) continue;
        std::swap(rows[r], rows[p]);
        const K piv = rows[r][c];
        for (std::size_t i = r + 1; i < m; ++i) {
            const K f = rows[i][c];
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                rows[i][j] = (piv * rows[i][j] - f * rows[r][j]) / prev;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }

    for (std::size_t rr = pivots.size(); rr-- > 0;) {
        const K piv = rows[rr][pivots[rr]];
        for (auto& x : rows[rr]) x = x / piv;
        for (std::size_t i = 0; i < rr; ++i) {
            const K f = rows[i][pivots[rr]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[rr][j];
        }
    }
    return pivots;
}

} // namespace detail

/// Reduced-echelon basis of the span of a list of vectors, remembering how
/// each basis vector is built from the inputs so that membership queries can
/// be answered with coefficients over the original inputs.
template <ScalarField K>
struct SpanBasis {
    std::size_t ambient = 0;
    std::size_t n_inputs = 0;
    std::vector<Vec<K>> basis;          ///< RREF rows spanning the same space.
    std::vector<std::size_t> pivots;    ///< pivot column of each basis row
    std::vector<Vec<K>> combos;         ///< basis[r] == sum_i combos[r][i] * input[i]

    std::size_t rank() const { return basis.size(); }

    /// Coefficients of v in `basis`, or nullopt when v is outside the span.
    /// RREF makes the candidate combination unique: read off pivot
    /// coordinates, then verify the residual vanishes exactly.
    std::optional<Vec<K>> expand(const Vec<K>& v) const {
        if (v.size() != ambient) throw DimError("expand: wrong ambient dimension");
        Vec<K> coeff(basis.size(), K::zero());
        Vec<K> residual = v;
        for (std::size_t r = 0; r < basis.size(); ++r) {
            coeff[r] = residual[pivots[r]];
            if (!coeff[r].is_zero()) axpy(residual, -coeff[r], basis[r]);
        }
        if (!vec_is_zero(residual)) return std::nullopt;
        return coeff;
    }

    /// Coefficients of v over the original input vectors (canonical choice
    /// when the inputs are dependent), or nullopt when outside the span.
    std::optional<Vec<K>> expand_in_inputs(const Vec<K>& v) const {
        auto coeff = expand(v);
        if (!coeff) return std::nullopt;
        Vec<K> over(n_inputs, K::zero());
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (!(*coeff)[r].is_zero()) axpy(over, (*coeff)[r], combos[r]);
        return over;
    }

    bool contains(const Vec<K>& v) const { return expand(v).has_value(); }
};

template <ScalarField K>
SpanBasis<K> span_basis(const std::vector<Vec<K>>& inputs, std::size_t ambient) {
    std::vector<Vec<K>> rows;
    rows.reserve(inputs.size());
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != ambient) throw DimError("span_basis: wrong ambient dimension");
        Vec<K> row = inputs[i];
        row.resize(ambient + inputs.size(), K::zero());
        row[ambient + i] = K::one();
        rows.push_back(std::move(row));
    }
    auto pivots = detail::rref_in_place(rows, ambient);

    SpanBasis<K> out;
    out.ambient = ambient;
    out.n_inputs = inputs.size();
    out.pivots = pivots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        out.basis.emplace_back(rows[r].begin(), rows[r].begin() + ambient);
        out.combos.emplace_back(rows[r].begin() + ambient, rows[r].end());
    }
    return out;
}

/// Basis of span(inputs) made of input vectors themselves: scan in input
/// order, keep each vector that enlarges the span.  The selection (and hence
/// every downstream basis label) is deterministic in the input order.
template <ScalarField K>
struct SelectedBasis {
    std::vector<Vec<K>> vectors;       ///< chosen inputs, in selection order
    std::vector<std::size_t> chosen;   ///< their indices in the input list
    SpanBasis<K> span;                 ///< span of `vectors`, for expansion

    std::size_t rank() const { return vectors.size(); }

    /// Unique coefficients of v over `vectors`, or nullopt if outside.
    std::optional<Vec<K>> expand(const Vec<K>& v) const { return span.expand_in_inputs(v); }
    bool contains(const Vec<K>& v) const { return span.contains(v); }
};

template <ScalarField K>
SelectedBasis<K> select_basis(const std::vector<Vec<K>>& inputs, std::size_t ambient) {
    SelectedBasis<K> out;
    out.span.ambient = ambient; // rank-0 span still answers expand/contains
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != ambient) throw DimError("select_basis: wrong ambient dimension");
        if (vec_is_zero(inputs[i])) continue;
        if (!out.vectors.empty() && out.span.contains(inputs[i])) continue;
        out.vectors.push_back(inputs[i]);
        out.chosen.push_back(i);
        out.span = span_basis(out.vectors, ambient);
    }
    return out;
}

/// Basis of the null space { x : M x = 0 }, one vector per free column,
/// ordered by free column index.
template <ScalarField K>
std::vector<Vec<K>> kernel(const Matrix<K>& M) {
    std::vector<Vec<K>> rows;
    rows.reserve(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Vec<K> row(M.cols(), K::zero());
        for (std::size_t j = 0; j < M.cols(); ++j) row[j] = M.at(i, j);
        rows.push_back(std::move(row));
    }
    auto pivots = detail::rref_in_place(rows, M.cols());

    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<K>> null;
    for (std::size_t f = 0; f < M.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(M.cols(), K::zero());
        v[f] = K::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
        null.push_back(std::move(v));
    }
    return null;
}

template <ScalarField K>
std::size_t rank(const Matrix<K>& M) {
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Vec<K> row(M.cols(), K::zero());
        for (std::size_t j = 0; j < M.cols(); ++j) row[j] = M.at(i, j);
        rows.push_back(std::move(row));
    }
    return detail::rref_in_place(rows, M.cols()).size();
}

/// Exact inverse of a square matrix; throws PreconditionError when singular.
template <ScalarField K>
Matrix<K> inverse(const Matrix<K>& M) {
    if (M.rows() != M.cols()) throw DimError("inverse of non-square matrix");
    const std::size_t n = M.rows();
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<K> row(2 * n, K::zero());
        for (std::size_t j = 0; j < n; ++j) row[j] = M.at(i, j);
        row[n + i] = K::one();
        rows.push_back(std::move(row));
    }
    auto pivots = detail::rref_in_place(rows, n);
    if (pivots.size() != n) throw PreconditionError("matrix is singular");
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rows[i][n + j];
    return inv;
}

} // namespace triplekit
