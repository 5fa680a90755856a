#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triplekit/cyclotomic.hpp"
#include "triplekit/errors.hpp"

namespace triplekit {

/// Coordinate vector over an exact field.
template <ScalarField K>
using Vec = std::vector<K>;

template <ScalarField K>
Vec<K> vec_zero(std::size_t n) {
    return Vec<K>(n, K::zero());
}

template <ScalarField K>
Vec<K> vec_unit(std::size_t n, std::size_t i) {
    Vec<K> v(n, K::zero());
    v.at(i) = K::one();
    return v;
}

template <ScalarField K>
bool vec_is_zero(const Vec<K>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <ScalarField K>
void check_same_dim(const Vec<K>& x, const Vec<K>& y) {
    if (x.size() != y.size()) throw DimError("vector dimension mismatch");
}

template <ScalarField K>
Vec<K> operator+(const Vec<K>& x, const Vec<K>& y) {
    check_same_dim(x, y);
    Vec<K> r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

template <ScalarField K>
Vec<K> operator-(const Vec<K>& x, const Vec<K>& y) {
    check_same_dim(x, y);
    Vec<K> r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

template <ScalarField K>
Vec<K> operator-(const Vec<K>& x) {
    Vec<K> r(x);
    for (auto& c : r) c = -c;
    return r;
}

template <ScalarField K>
Vec<K> operator*(const K& c, const Vec<K>& x) {
    Vec<K> r(x);
    for (auto& e : r) e *= c;
    return r;
}

/// x += c*y.
template <ScalarField K>
void axpy(Vec<K>& x, const K& c, const Vec<K>& y) {
    check_same_dim(x, y);
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * y[i];
}

template <ScalarField K>
std::string vec_str(const Vec<K>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + "]";
}

/// Nonzero coordinates with labels, e.g. "2*e0 - 1/2*e3"; "0" when zero.
template <ScalarField K>
std::string vec_str_labeled(const Vec<K>& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += v[i].str() + "*" + labels.at(i);
    }
    return s.empty() ? "0" : s;
}

} // namespace triplekit
