#pragma once

#include <concepts>
#include <string>

#include "triplekit/rational.hpp"

namespace triplekit {

/// Element a + b*w of the quadratic field Q(w), where w is a primitive cube
/// root of unity: w^2 = -1 - w.  Coefficients are exact rationals.
class Cyc {
  public:
    Cyc() = default;
    Cyc(long n) : a_(n) {}
    Cyc(Rational a) : a_(std::move(a)) {}
    Cyc(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Cyc zero() { return Cyc(); }
    static Cyc one() { return Cyc(1); }
    static Cyc from_int(long n) { return Cyc(n); }
    static Cyc omega() { return Cyc(Rational(0), Rational(1)); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Galois conjugate: w -> w^2, i.e. a + b*w -> (a - b) - b*w.
    Cyc conj() const { return Cyc(a_ - b_, -b_); }

    /// Field norm x * conj(x) = a^2 - a*b + b^2; zero only at zero.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    friend Cyc operator+(const Cyc& x, const Cyc& y) { return Cyc(x.a_ + y.a_, x.b_ + y.b_); }
    friend Cyc operator-(const Cyc& x, const Cyc& y) { return Cyc(x.a_ - y.a_, x.b_ - y.b_); }
    Cyc operator-() const { return Cyc(-a_, -b_); }

    // (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w.
    friend Cyc operator*(const Cyc& x, const Cyc& y) {
        Rational bb = x.b_ * y.b_;
        return Cyc(x.a_ * y.a_ - bb, x.a_ * y.b_ + x.b_ * y.a_ - bb);
    }

    Cyc inverse() const {
        if (is_zero()) throw DivisionByZero();
        Rational n = norm();
        Cyc c = conj();
        return Cyc(c.a_ / n, c.b_ / n);
    }
    friend Cyc operator/(const Cyc& x, const Cyc& y) { return x * y.inverse(); }

    Cyc& operator+=(const Cyc& y) { a_ += y.a_; b_ += y.b_; return *this; }
    Cyc& operator-=(const Cyc& y) { a_ -= y.a_; b_ -= y.b_; return *this; }
    Cyc& operator*=(const Cyc& y) { *this = *this * y; return *this; }
    Cyc& operator/=(const Cyc& y) { *this = *this / y; return *this; }

    friend bool operator==(const Cyc& x, const Cyc& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

    /// Human-readable form: "0", "a", "b*w" or "a+b*w".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string bw = (b_ == Rational(1))    ? "w"
                         : (b_ == Rational(-1)) ? "-w"
                                                : b_.str() + "*w";
        if (a_.is_zero()) return bw;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + bw;
    }

  private:
    Rational a_, b_;
};

/// Exact field the tensor kernels are generic over (Q or Q(w)).
template <class K>
concept ScalarField = requires(const K x, const K y) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_int(long{}) } -> std::same_as<K>;
    { x + y } -> std::same_as<K>;
    { x - y } -> std::same_as<K>;
    { x * y } -> std::same_as<K>;
    { x / y } -> std::same_as<K>;
    { -x } -> std::same_as<K>;
    { x == y } -> std::same_as<bool>;
    { x.is_zero() } -> std::same_as<bool>;
    { x.str() } -> std::same_as<std::string>;
    { x.inverse() } -> std::same_as<K>;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<Cyc>);

/// Whether K contains the cube root of unity w (Q(w) does, Q does not).
template <class K>
inline constexpr bool has_omega = false;
template <>
inline constexpr bool has_omega<Cyc> = true;

inline Cyc promote(const Rational& x) { return Cyc(x); }
inline Cyc promote(const Cyc& x) { return x; }

} // namespace triplekit
