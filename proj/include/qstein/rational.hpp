#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qstein/errors.hpp"

namespace qstein {

// Exact rational scalars are GMP rationals; mpq_class keeps fractions
// reduced with positive denominators, which is exactly the canonical form
// we need for byte-stable printing.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

double to_double(const Rational& x);

// "a" when the denominator is 1, otherwise "a/b" with b > 0.
std::string rational_str(const Rational& x);

// Parses "a" or "a/b" (optional leading sign on the numerator).
Rational parse_rational(const std::string& text);

// sqrt(x) when x is a square of a rational, nullopt otherwise.  x must be
// nonnegative.
std::optional<Rational> exact_sqrt(const Rational& x);

// An element of Q(i).  All structure constants in the library live here, so
// identities can be asserted with exact equality.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |x|^2 = re^2 + im^2, always an exact nonnegative rational.
    Rational abs_sq() const { return re_ * re_ + im_ * im_; }

    // |x| when it happens to be rational (covers real, purely imaginary and
    // pythagorean values like 3/5 + 4/5 i).
    std::optional<Rational> abs_exact() const { return exact_sqrt(abs_sq()); }

    double abs() const;

    GaussianRational inverse() const;  // throws ZeroParameter on 0

    // x^e for integer e; negative exponents require x != 0.
    GaussianRational pow(long e) const;

    std::string str() const;
    static GaussianRational parse(const std::string& text);  // throws SyntaxError

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

enum class ModulusClass { LessThanOne, EqualOne, GreaterThanOne };

std::string modulus_class_name(ModulusClass c);

// Compares |q|^2 with 1 in exact rational arithmetic.  Throws ZeroParameter
// for q = 0 (the deformation parameter must lie in C^x).
ModulusClass classify_modulus(const GaussianRational& q);

// A nonzero deformation parameter together with its |q|-vs-1 class.
class QParam {
public:
    explicit QParam(GaussianRational value)
        : value_(std::move(value)), modulus_class_(classify_modulus(value_)) {}

    const GaussianRational& value() const { return value_; }
    ModulusClass modulus_class() const { return modulus_class_; }

    GaussianRational pow(long e) const { return value_.pow(e); }
    Rational abs_sq() const { return value_.abs_sq(); }
    std::optional<Rational> abs_exact() const { return value_.abs_exact(); }
    double abs() const { return value_.abs(); }

    QParam inverse() const { return QParam(value_.inverse()); }

    friend bool operator==(const QParam& a, const QParam& b) { return a.value_ == b.value_; }

private:
    GaussianRational value_;
    ModulusClass modulus_class_;
};

}  // namespace qstein
