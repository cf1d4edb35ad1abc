#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsag/gaussian.hpp"

namespace nsag {

// Valuation of an LCNumber: a rational, or +infinity for zero.
class Valuation {
 public:
  Valuation() = default;  // +infinity
  explicit Valuation(Rational value) : finite_(true), value_(std::move(value)) {}

  static Valuation infinity() { return {}; }

  bool is_infinite() const { return !finite_; }
  // Precondition: finite.
  const Rational& value() const { return value_; }

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  bool finite_ = false;
  Rational value_;
};

std::string to_string(const Valuation& v);

struct LCTerm {
  Rational exponent;
  GaussianRational coeff;
};

// A finite sum  sum_k c_k * eps^(q_k)  with q_k rational, strictly increasing,
// and every c_k nonzero. eps is a fixed positive infinitesimal. The empty sum is
// zero. Ring operations are exact; only inversion and roots need truncation.
class LCNumber {
 public:
  LCNumber() = default;
  LCNumber(long value);              // NOLINT(implicit)
  LCNumber(GaussianRational value);  // NOLINT(implicit)

  static LCNumber epsilon(const Rational& exponent = 1);
  static LCNumber monomial(GaussianRational coeff, Rational exponent);
  // Sorts, merges equal exponents and drops zero coefficients.
  static LCNumber from_terms(std::vector<LCTerm> terms);

  const std::vector<LCTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Zero, or a single term at exponent 0.
  bool is_standard() const;
  // A single nonzero term c*eps^q; exactly the units of the finite-sum ring.
  bool is_unit() const { return terms_.size() == 1; }
  Valuation valuation() const;
  // Lowest-exponent term. Precondition: nonzero.
  const LCTerm& leading_term() const { return terms_.front(); }
  GaussianRational coefficient_at(const Rational& exponent) const;

  // Terms with exponent <= max_exponent.
  LCNumber truncated(const Rational& max_exponent) const;
  // Multiplication by c*eps^q in place of a full product.
  LCNumber scaled(const GaussianRational& c, const Rational& q) const;

  LCNumber& operator+=(const LCNumber& o);
  LCNumber& operator-=(const LCNumber& o);
  LCNumber& operator*=(const LCNumber& o);

  friend LCNumber operator+(LCNumber a, const LCNumber& b) { return a += b; }
  friend LCNumber operator-(LCNumber a, const LCNumber& b) { return a -= b; }
  friend LCNumber operator*(const LCNumber& a, const LCNumber& b);
  LCNumber operator-() const;

  friend bool operator==(const LCNumber& a, const LCNumber& b);

 private:
  std::vector<LCTerm> terms_;
};

LCNumber pow(const LCNumber& base, unsigned exponent);

struct TruncationOrder {
  Rational order{16};

  TruncationOrder() = default;
  // Throws kInvalidArgument unless order > 0.
  explicit TruncationOrder(Rational value);
};

enum class MagnitudeClass { kZero, kInfinitesimal, kAppreciable, kUnlimited };

std::string_view to_string(MagnitudeClass c);

struct Classification {
  Valuation valuation;
  MagnitudeClass kind;
};

bool is_limited(const LCNumber& x);
bool is_infinitesimal(const LCNumber& x);
bool is_appreciable(const LCNumber& x);
bool is_unlimited(const LCNumber& x);

// y with valuation(x*y - 1) > t.order. Exact when x is a unit.
LCNumber lc_inv(const LCNumber& x, const TruncationOrder& t);
// y with valuation(y^n - x) > t.order and valuation(y) = valuation(x)/n.
// Throws kNonConstructibleRoot when the leading coefficient has no n-th root in Q(i).
LCNumber lc_nth_root(const LCNumber& x, unsigned n, const TruncationOrder& t);
Classification lc_classify(const LCNumber& x);
// Standard part. Throws kUnlimitedValue on unlimited input.
GaussianRational lc_st(const LCNumber& x);
// Magnitude preorder: smaller valuation is larger; ties by squared modulus of the
// leading coefficient.
std::strong_ordering lc_abs_cmp(const LCNumber& x, const LCNumber& y);

// Normalized gcd in the finite-sum ring (lowest term 1*eps^0); gcd(0, 0) = 0.
LCNumber lc_gcd(const LCNumber& a, const LCNumber& b);
// a / b when b divides a in the finite-sum ring.
std::optional<LCNumber> lc_divide_exact(const LCNumber& a, const LCNumber& b);

// Terms in increasing exponent order, e.g. "1 - eps + 1/2*eps^(3/2)".
std::string to_string(const LCNumber& x);

}  // namespace nsag
