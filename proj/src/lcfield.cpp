#include "nsag/lcfield.hpp"

#include <algorithm>

#include "nsag/detail/upoly.hpp"
#include "nsag/errors.hpp"

namespace nsag {

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (!a.finite_ || !b.finite_) {
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Valuation& v) {
  return v.is_infinite() ? std::string("inf") : to_string(v.value());
}

LCNumber::LCNumber(long value) : LCNumber(GaussianRational(value)) {}

LCNumber::LCNumber(GaussianRational value) {
  if (!value.is_zero()) terms_.push_back({Rational(0), std::move(value)});
}

LCNumber LCNumber::epsilon(const Rational& exponent) { return monomial(GaussianRational(1), exponent); }

LCNumber LCNumber::monomial(GaussianRational coeff, Rational exponent) {
  LCNumber x;
  exponent.canonicalize();
  if (!coeff.is_zero()) x.terms_.push_back({std::move(exponent), std::move(coeff)});
  return x;
}

LCNumber LCNumber::from_terms(std::vector<LCTerm> terms) {
  for (auto& t : terms) t.exponent.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const LCTerm& a, const LCTerm& b) { return a.exponent < b.exponent; });
  LCNumber x;
  for (auto& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().exponent == t.exponent) {
      x.terms_.back().coeff += t.coeff;
    } else {
      if (!x.terms_.empty() && x.terms_.back().coeff.is_zero()) x.terms_.pop_back();
      x.terms_.push_back(std::move(t));
    }
  }
  if (!x.terms_.empty() && x.terms_.back().coeff.is_zero()) x.terms_.pop_back();
  return x;
}

bool LCNumber::is_standard() const {
  return terms_.empty() || (terms_.size() == 1 && sgn(terms_.front().exponent) == 0);
}

Valuation LCNumber::valuation() const {
  if (terms_.empty()) return Valuation::infinity();
  return Valuation(terms_.front().exponent);
}

GaussianRational LCNumber::coefficient_at(const Rational& exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coeff;
    if (t.exponent > exponent) break;
  }
  return GaussianRational(0);
}

LCNumber LCNumber::truncated(const Rational& max_exponent) const {
  LCNumber x;
  for (const auto& t : terms_) {
    if (t.exponent > max_exponent) break;
    x.terms_.push_back(t);
  }
  return x;
}

LCNumber LCNumber::scaled(const GaussianRational& c, const Rational& q) const {
  if (c.is_zero()) return {};
  LCNumber x = *this;
  for (auto& t : x.terms_) {
    t.exponent += q;
    t.coeff *= c;
  }
  return x;
}

namespace {

// Merge of two sorted term lists; sign = +1 for addition, -1 for subtraction.
std::vector<LCTerm> merge(const std::vector<LCTerm>& a, const std::vector<LCTerm>& b, bool subtract) {
  std::vector<LCTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = 1;
    } else if (j == b.size()) {
      c = -1;
    } else {
      c = cmp(a[i].exponent, b[j].exponent);
    }
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      LCTerm t = b[j++];
      if (subtract) t.coeff = -t.coeff;
      out.push_back(std::move(t));
    } else {
      GaussianRational s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LCNumber& LCNumber::operator+=(const LCNumber& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LCNumber& LCNumber::operator-=(const LCNumber& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LCNumber operator*(const LCNumber& a, const LCNumber& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return b.scaled(a.terms_[0].coeff, a.terms_[0].exponent);
  if (b.terms_.size() == 1) return a.scaled(b.terms_[0].coeff, b.terms_[0].exponent);
  std::vector<LCTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back({Rational(s.exponent + t.exponent), s.coeff * t.coeff});
    }
  }
  return LCNumber::from_terms(std::move(prod));
}

LCNumber& LCNumber::operator*=(const LCNumber& o) {
  *this = *this * o;
  return *this;
}

LCNumber LCNumber::operator-() const {
  LCNumber x = *this;
  for (auto& t : x.terms_) t.coeff = -t.coeff;
  return x;
}

bool operator==(const LCNumber& a, const LCNumber& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exponent != b.terms_[k].exponent || !(a.terms_[k].coeff == b.terms_[k].coeff)) {
      return false;
    }
  }
  return true;
}

LCNumber pow(const LCNumber& base, unsigned exponent) {
  LCNumber acc(1);
  LCNumber b = base;
  while (exponent > 0) {
    if (exponent & 1U) acc *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return acc;
}

TruncationOrder::TruncationOrder(Rational value) : order(std::move(value)) {
  if (sgn(order) <= 0) {
    throw AlgebraError(ErrorCode::kInvalidArgument, "truncation order must be positive");
  }
}

std::string_view to_string(MagnitudeClass c) {
  switch (c) {
    case MagnitudeClass::kZero: return "zero";
    case MagnitudeClass::kInfinitesimal: return "infinitesimal";
    case MagnitudeClass::kAppreciable: return "appreciable";
    case MagnitudeClass::kUnlimited: return "unlimited";
  }
  return "unknown";
}

bool is_limited(const LCNumber& x) { return x.is_zero() || sgn(x.leading_term().exponent) >= 0; }
bool is_infinitesimal(const LCNumber& x) { return x.is_zero() || sgn(x.leading_term().exponent) > 0; }
bool is_appreciable(const LCNumber& x) { return !x.is_zero() && sgn(x.leading_term().exponent) == 0; }
bool is_unlimited(const LCNumber& x) { return !x.is_zero() && sgn(x.leading_term().exponent) < 0; }

namespace {

LCNumber unit_inverse(const LCTerm& lead) {
  return LCNumber::monomial(lead.coeff.inverse(), Rational(-lead.exponent));
}

}  // namespace

LCNumber lc_inv(const LCNumber& x, const TruncationOrder& t) {
  if (x.is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "inverse of zero");
  const LCNumber u = unit_inverse(x.leading_term());
  if (x.is_unit()) return u;
  // x = lead * (1 + delta) with valuation(delta) > 0; iterate y <- 1 - delta*y to a fixed point.
  const LCNumber delta = x * u - LCNumber(1);
  LCNumber y(1);
  for (;;) {
    LCNumber next = (LCNumber(1) - delta * y).truncated(t.order);
    if (next == y) break;
    y = std::move(next);
  }
  return u * y;
}

LCNumber lc_nth_root(const LCNumber& x, unsigned n, const TruncationOrder& t) {
  if (n == 0) throw AlgebraError(ErrorCode::kInvalidArgument, "root of order zero");
  if (x.is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "root of zero");
  const LCTerm& lead = x.leading_term();
  auto root = gaussian_nth_root(lead.coeff, n);
  if (!root) {
    throw AlgebraError(ErrorCode::kNonConstructibleRoot,
                       "leading coefficient " + to_string(lead.coeff) + " has no exact " +
                           std::to_string(n) + "-th root in Q(i)");
  }
  const Rational v = lead.exponent;
  const LCNumber head = LCNumber::monomial(*root, Rational(v / n));
  if (x.is_unit()) return head;

  // (1 + delta)^(1/n) by the binomial series, truncated so that the residual of
  // head^n * series^n against x lands above t.order.
  const LCNumber delta = x * unit_inverse(lead) - LCNumber(1);
  const Rational keep = std::max(Rational(t.order - v), Rational(0));
  const Rational alpha(1, n);
  LCNumber series(1);
  LCNumber term(1);
  for (unsigned k = 1;; ++k) {
    const Rational factor = (alpha - Rational(k - 1)) / Rational(k);
    term = (term * delta).truncated(keep).scaled(GaussianRational(factor), Rational(0));
    if (term.is_zero()) break;
    series += term;
  }
  return head * series;
}

Classification lc_classify(const LCNumber& x) {
  if (x.is_zero()) return {Valuation::infinity(), MagnitudeClass::kZero};
  const Rational& v = x.leading_term().exponent;
  MagnitudeClass kind = MagnitudeClass::kAppreciable;
  if (sgn(v) > 0) kind = MagnitudeClass::kInfinitesimal;
  if (sgn(v) < 0) kind = MagnitudeClass::kUnlimited;
  return {Valuation(v), kind};
}

GaussianRational lc_st(const LCNumber& x) {
  if (is_unlimited(x)) {
    throw AlgebraError(ErrorCode::kUnlimitedValue, "standard part of unlimited value " + to_string(x));
  }
  return x.coefficient_at(Rational(0));
}

std::strong_ordering lc_abs_cmp(const LCNumber& x, const LCNumber& y) {
  const Valuation vx = x.valuation();
  const Valuation vy = y.valuation();
  if (vx != vy) return vx < vy ? std::strong_ordering::greater : std::strong_ordering::less;
  if (x.is_zero()) return std::strong_ordering::equal;
  const int c = cmp(x.leading_term().coeff.norm(), y.leading_term().coeff.norm());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

// Laurent view of finite sums: with t = eps^(1/L), x = eps^val(x) * P(t), P(0) != 0.
Integer exponent_lcm(const LCNumber& a, const LCNumber& b) {
  Integer l = 1;
  for (const LCNumber* x : {&a, &b}) {
    for (const auto& term : x->terms()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.exponent.get_den_mpz_t());
    }
  }
  return l;
}

upoly::Dense to_dense(const LCNumber& x, const Integer& l) {
  const Rational base = x.leading_term().exponent;
  upoly::Dense p;
  for (const auto& term : x.terms()) {
    Rational shifted = (term.exponent - base) * l;
    const auto idx = static_cast<std::size_t>(shifted.get_num().get_ui());
    if (p.size() <= idx) p.resize(idx + 1, GaussianRational(0));
    p[idx] = term.coeff;
  }
  return p;
}

LCNumber from_dense(const upoly::Dense& p, const Rational& base, const Integer& l) {
  std::vector<LCTerm> terms;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    terms.push_back({Rational(base + Rational(Integer(static_cast<unsigned long>(k)), l)), p[k]});
  }
  return LCNumber::from_terms(std::move(terms));
}

LCNumber normalized(const LCNumber& x) {
  if (x.is_zero()) return x;
  return x * unit_inverse(x.leading_term());
}

}  // namespace

LCNumber lc_gcd(const LCNumber& a, const LCNumber& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_unit() || b.is_unit()) return LCNumber(1);
  const Integer l = exponent_lcm(a, b);
  upoly::Dense g = upoly::gcd(to_dense(a, l), to_dense(b, l));
  const GaussianRational c0 = g.front().inverse();
  for (auto& c : g) c *= c0;
  return from_dense(g, Rational(0), l);
}

std::optional<LCNumber> lc_divide_exact(const LCNumber& a, const LCNumber& b) {
  if (b.is_zero()) throw AlgebraError(ErrorCode::kDivisionByZero, "exact division by zero");
  if (a.is_zero()) return LCNumber();
  if (b.is_unit()) return a * unit_inverse(b.leading_term());
  const Integer l = exponent_lcm(a, b);
  auto [q, r] = upoly::divmod(to_dense(a, l), to_dense(b, l));
  if (!r.empty()) return std::nullopt;
  return from_dense(q, Rational(a.leading_term().exponent - b.leading_term().exponent), l);
}

namespace {

std::string eps_power(const Rational& q) {
  if (sgn(q) == 0) return "";
  if (q == 1) return "eps";
  if (q.get_den() == 1 && sgn(q) > 0) return "eps^" + to_string(q);
  return "eps^(" + to_string(q) + ")";
}

}  // namespace

std::string to_string(const LCNumber& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const Rational& value, bool imaginary, const Rational& exponent) {
    if (sgn(value) == 0) return;
    const bool negative = sgn(value) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    const Rational mag = abs(value);
    const std::string eps = eps_power(exponent);
    if (mag != 1 || (!imaginary && eps.empty())) body = to_string(mag);
    if (imaginary) body += (body.empty() ? "" : "*") + std::string("i");
    if (!eps.empty()) body += (body.empty() ? "" : "*") + eps;
    out += body;
  };
  for (const auto& t : x.terms()) {
    emit(t.coeff.re(), false, t.exponent);
    emit(t.coeff.im(), true, t.exponent);
  }
  return out;
}

}  // namespace nsag
