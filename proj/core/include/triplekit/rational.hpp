#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "triplekit/errors.hpp"

namespace triplekit {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always kept canonical: denominator > 0 and gcd(num, den) == 1 (0 is 0/1).
/// Backed by GMP's mpq, which maintains exactly this normal form.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw DivisionByZero();
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long n) { return Rational(n); }

    /// Parse "p", "-p" or "p/q" with q != 0. Rejects anything else.
    static Rational parse(std::string_view text) {
        std::string s(text);
        validate_text(s);
        if (s.front() == '+') s.erase(0, 1); // mpq set_str rejects an explicit plus
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("invalid rational: '" + s + "'");
        if (q.get_den() == 0) throw ParseError("zero denominator in rational: '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q), already_canonical{});
    }

    /// Canonical text: "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.q_ + y.q_), already_canonical{});
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.q_ - y.q_), already_canonical{});
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(mpq_class(x.q_ * y.q_), already_canonical{});
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(x.q_ / y.q_), already_canonical{});
    }
    Rational operator-() const { return Rational(mpq_class(-q_), already_canonical{}); }

    Rational& operator+=(const Rational& y) { q_ += y.q_; return *this; }
    Rational& operator-=(const Rational& y) { q_ -= y.q_; return *this; }
    Rational& operator*=(const Rational& y) { q_ *= y.q_; return *this; }
    Rational& operator/=(const Rational& y) { *this = *this / y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.q_ == y.q_; }
    friend bool operator!=(const Rational& x, const Rational& y) { return x.q_ != y.q_; }
    friend bool operator<(const Rational& x, const Rational& y) { return x.q_ < y.q_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1 / q_), already_canonical{});
    }

  private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : q_(std::move(q)) {}

    // GMP's set_str is lenient (whitespace, empty numerator); enforce the
    // strict grammar [+-]?digits(/digits)? ourselves before handing it over.
    static void validate_text(const std::string& s) {
        std::size_t i = 0;
        auto fail = [&] { throw ParseError("invalid rational: '" + s + "'"); };
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) fail();
        if (i == s.size()) return;
        if (s[i] != '/') fail();
        ++i;
        digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0 || i != s.size()) fail();
    }

    mpq_class q_;
};

} // namespace triplekit
