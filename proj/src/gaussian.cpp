#include "nsag/gaussian.hpp"

#include <vector>

#include "nsag/errors.hpp"

namespace nsag {

namespace {

// Enumeration cap for the Gaussian-integer root search (|root|^2 <= cap^2).
constexpr unsigned long kRootSearchCap = 4'000'000;

struct GaussInt {
  Integer re;
  Integer im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt pow(GaussInt base, unsigned e) {
  GaussInt acc{1, 0};
  while (e > 0) {
    if (e & 1U) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return acc;
}

bool exact_root(const Integer& value, unsigned n, Integer& out) {
  if (sgn(value) < 0) return false;
  return mpz_root(out.get_mpz_t(), value.get_mpz_t(), n) != 0;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational::GaussianRational(Rational re, Rational im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Rational GaussianRational::norm() const { return Rational(re_ * re_ + im_ * im_); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "inverse of zero");
  if (is_real()) return GaussianRational(Rational(1 / re_));
  Rational n = norm();
  return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational acc(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1U) acc *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return acc;
}

std::string to_string(const GaussianRational& c) {
  const Rational& re = c.re();
  const Rational& im = c.im();
  if (sgn(im) == 0) return to_string(re);
  std::string imag;
  Rational mag = abs(im);
  if (mag == 1) {
    imag = "i";
  } else {
    imag = to_string(mag) + "*i";
  }
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
  return to_string(re) + (sgn(im) < 0 ? "-" : "+") + imag;
}

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::optional<GaussianRational> gaussian_nth_root(const GaussianRational& c, unsigned n) {
  if (n == 0) throw AlgebraError(ErrorCode::kInvalidArgument, "root of order zero");
  if (c.is_zero()) return GaussianRational(0);
  if (n == 1) return c;

  // c = (a + b i) / d with d a positive integer; then root(c) = root((a+bi) d^(n-1)) / d,
  // and the inner root must be a Gaussian integer since Z[i] is integrally closed.
  Integer d;
  mpz_lcm(d.get_mpz_t(), c.re().get_den_mpz_t(), c.im().get_den_mpz_t());
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), n - 1);
  GaussInt target{Integer(c.re() * d) * scale, Integer(c.im() * d) * scale};

  auto finish = [&](const GaussInt& y) {
    return GaussianRational(Rational(y.re, d), Rational(y.im, d));
  };

  if (sgn(target.im) == 0 && sgn(target.re) > 0) {
    Integer s;
    if (exact_root(target.re, n, s)) return finish({s, 0});
  }

  Integer norm = target.re * target.re + target.im * target.im;
  Integer r;
  if (!exact_root(norm, n, r)) return std::nullopt;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), r.get_mpz_t());
  if (bound > kRootSearchCap) {
    throw AlgebraError(ErrorCode::kNonConstructibleRoot,
                       "root search bound exceeded for " + to_string(c));
  }

  std::vector<GaussInt> found;
  for (Integer u = -bound; u <= bound; ++u) {
    Integer v2 = r - u * u;
    if (mpz_perfect_square_p(v2.get_mpz_t()) == 0) continue;
    Integer v;
    mpz_sqrt(v.get_mpz_t(), v2.get_mpz_t());
    for (int sign : {1, -1}) {
      GaussInt y{u, v * sign};
      GaussInt p = pow(y, n);
      if (p.re == target.re && p.im == target.im) found.push_back(y);
      if (sgn(v) == 0) break;
    }
  }
  if (found.empty()) return std::nullopt;
  const GaussInt* best = &found.front();
  for (const auto& y : found) {
    if (y.re > best->re || (y.re == best->re && y.im > best->im)) best = &y;
  }
  return finish(*best);
}

}  // namespace nsag
