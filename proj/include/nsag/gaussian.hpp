#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace nsag {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Exact element of Q(i). Both parts are kept canonical by GMP.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  // Squared modulus re^2 + im^2.
  Rational norm() const;
  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Throws AlgebraError(kDivisionByZero) on zero.
  GaussianRational inverse() const;

 private:
  Rational re_;
  Rational im_;
};

GaussianRational pow(const GaussianRational& base, unsigned exponent);

// "0", "3", "-1/2", "i", "-2*i", "1+2*i", "1/3-i".
std::string to_string(const GaussianRational& c);

// An exact n-th root inside Q(i) when one exists. Among several roots the one
// with the largest real part (then largest imaginary part) is returned.
std::optional<GaussianRational> gaussian_nth_root(const GaussianRational& c, unsigned n);

// Total order on Q(i) by (re, im); used only to make root lists deterministic.
bool lex_less(const GaussianRational& a, const GaussianRational& b);

}  // namespace nsag
