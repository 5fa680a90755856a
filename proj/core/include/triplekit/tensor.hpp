#pragma once

#include <cstddef>
#include <vector>

#include "triplekit/matrix.hpp"
#include "triplekit/space.hpp"
#include "triplekit/vec.hpp"

namespace triplekit {

/// Structure constants of a bilinear map lhs x rhs -> out:
/// T(e_i, f_j) = sum_k c[i][j][k] g_k.  Dense storage, exact coefficients.
/// Products inside one algebra are the special case lhs == rhs == out.
template <ScalarField K>
class BilinearTensor {
  public:
    BilinearTensor() = default;
    BilinearTensor(BasedSpace lhs, BasedSpace rhs, BasedSpace out)
        : lhs_(std::move(lhs)), rhs_(std::move(rhs)), out_(std::move(out)),
          c_(lhs_.dim() * rhs_.dim() * out_.dim(), K::zero()) {}

    const BasedSpace& lhs() const { return lhs_; }
    const BasedSpace& rhs() const { return rhs_; }
    const BasedSpace& out() const { return out_; }

    K& at(std::size_t i, std::size_t j, std::size_t k) {
        return c_.at((i * rhs_.dim() + j) * out_.dim() + k);
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c_.at((i * rhs_.dim() + j) * out_.dim() + k);
    }

    /// T(e_i, f_j) as a coordinate vector in the output space.
    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        Vec<K> r(out_.dim(), K::zero());
        for (std::size_t k = 0; k < out_.dim(); ++k) r[k] = at(i, j, k);
        return r;
    }

    Vec<K> apply(const Vec<K>& x, const Vec<K>& y) const {
        if (x.size() != lhs_.dim() || y.size() != rhs_.dim())
            throw DimError("bilinear apply: argument dimension mismatch");
        Vec<K> r(out_.dim(), K::zero());
        for (std::size_t i = 0; i < lhs_.dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < rhs_.dim(); ++j) {
                if (y[j].is_zero()) continue;
                K xy = x[i] * y[j];
                for (std::size_t k = 0; k < out_.dim(); ++k) {
                    const K& c = at(i, j, k);
                    if (!c.is_zero()) r[k] += xy * c;
                }
            }
        }
        return r;
    }

    /// Matrix of y -> T(x, y) for fixed x.
    Matrix<K> left_matrix(const Vec<K>& x) const {
        Matrix<K> m(out_.dim(), rhs_.dim());
        for (std::size_t j = 0; j < rhs_.dim(); ++j) {
            Vec<K> col = apply(x, vec_unit<K>(rhs_.dim(), j));
            for (std::size_t k = 0; k < out_.dim(); ++k) m.at(k, j) = col[k];
        }
        return m;
    }

    /// Matrix of x -> T(x, y) for fixed y.
    Matrix<K> right_matrix(const Vec<K>& y) const {
        Matrix<K> m(out_.dim(), lhs_.dim());
        for (std::size_t i = 0; i < lhs_.dim(); ++i) {
            Vec<K> col = apply(vec_unit<K>(lhs_.dim(), i), y);
            for (std::size_t k = 0; k < out_.dim(); ++k) m.at(k, i) = col[k];
        }
        return m;
    }

    bool same_coefficients(const BilinearTensor& other) const {
        return lhs_.dim() == other.lhs_.dim() && rhs_.dim() == other.rhs_.dim() &&
               out_.dim() == other.out_.dim() && c_ == other.c_;
    }

    bool is_symmetric() const { return check_flip(false); }
    bool is_skew() const { return check_flip(true); }

  private:
    bool check_flip(bool skew) const {
        if (lhs_.dim() != rhs_.dim()) throw DimError("symmetry check needs lhs == rhs");
        for (std::size_t i = 0; i < lhs_.dim(); ++i)
            for (std::size_t j = 0; j < rhs_.dim(); ++j)
                for (std::size_t k = 0; k < out_.dim(); ++k) {
                    K flipped = skew ? -at(j, i, k) : at(j, i, k);
                    if (at(i, j, k) != flipped) return false;
                }
        return true;
    }

    BasedSpace lhs_, rhs_, out_;
    std::vector<K> c_;
};

/// Structure constants of a trilinear map s1 x s2 x s3 -> out:
/// T(e_i, f_j, g_k) = sum_l c[i][j][k][l] h_l.
template <ScalarField K>
class TrilinearTensor {
  public:
    TrilinearTensor() = default;
    TrilinearTensor(BasedSpace s1, BasedSpace s2, BasedSpace s3, BasedSpace out)
        : s1_(std::move(s1)), s2_(std::move(s2)), s3_(std::move(s3)), out_(std::move(out)),
          c_(s1_.dim() * s2_.dim() * s3_.dim() * out_.dim(), K::zero()) {}

    const BasedSpace& s1() const { return s1_; }
    const BasedSpace& s2() const { return s2_; }
    const BasedSpace& s3() const { return s3_; }
    const BasedSpace& out() const { return out_; }

    K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return c_.at(((i * s2_.dim() + j) * s3_.dim() + k) * out_.dim() + l);
    }
    const K& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return c_.at(((i * s2_.dim() + j) * s3_.dim() + k) * out_.dim() + l);
    }

    Vec<K> basis_image(std::size_t i, std::size_t j, std::size_t k) const {
        Vec<K> r(out_.dim(), K::zero());
        for (std::size_t l = 0; l < out_.dim(); ++l) r[l] = at(i, j, k, l);
        return r;
    }

    Vec<K> apply(const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
        if (x.size() != s1_.dim() || y.size() != s2_.dim() || z.size() != s3_.dim())
            throw DimError("trilinear apply: argument dimension mismatch");
        Vec<K> r(out_.dim(), K::zero());
        for (std::size_t i = 0; i < s1_.dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < s2_.dim(); ++j) {
                if (y[j].is_zero()) continue;
                K xy = x[i] * y[j];
                for (std::size_t k = 0; k < s3_.dim(); ++k) {
                    if (z[k].is_zero()) continue;
                    K xyz = xy * z[k];
                    for (std::size_t l = 0; l < out_.dim(); ++l) {
                        const K& c = at(i, j, k, l);
                        if (!c.is_zero()) r[l] += xyz * c;
                    }
                }
            }
        }
        return r;
    }

    /// Matrix of z -> T(x, y, z) for fixed x, y.
    Matrix<K> matrix_fixing_12(const Vec<K>& x, const Vec<K>& y) const {
        Matrix<K> m(out_.dim(), s3_.dim());
        for (std::size_t k = 0; k < s3_.dim(); ++k) {
            Vec<K> col = apply(x, y, vec_unit<K>(s3_.dim(), k));
            for (std::size_t l = 0; l < out_.dim(); ++l) m.at(l, k) = col[l];
        }
        return m;
    }

    /// Matrix of y -> T(x, y, z) for fixed x, z.
    Matrix<K> matrix_fixing_13(const Vec<K>& x, const Vec<K>& z) const {
        Matrix<K> m(out_.dim(), s2_.dim());
        for (std::size_t j = 0; j < s2_.dim(); ++j) {
            Vec<K> col = apply(x, vec_unit<K>(s2_.dim(), j), z);
            for (std::size_t l = 0; l < out_.dim(); ++l) m.at(l, j) = col[l];
        }
        return m;
    }

    bool same_coefficients(const TrilinearTensor& other) const {
        return s1_.dim() == other.s1_.dim() && s2_.dim() == other.s2_.dim() &&
               s3_.dim() == other.s3_.dim() && out_.dim() == other.out_.dim() && c_ == other.c_;
    }

  private:
    BasedSpace s1_, s2_, s3_, out_;
    std::vector<K> c_;
};

} // namespace triplekit
