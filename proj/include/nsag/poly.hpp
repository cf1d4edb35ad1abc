#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nsag/gaussian.hpp"
#include "nsag/lcfield.hpp"
#include "nsag/monomial.hpp"

namespace nsag {

// Sparse multivariate polynomial with coefficients in K. K is GaussianRational
// (the standard domain) or LCNumber (the extended domain); the standard domain
// embeds losslessly into the extended one through extend().
template <class K>
class Poly {
 public:
  using Coeff = K;
  using Term = std::pair<Monomial, K>;

  Poly() = default;

  static Poly constant(K c) { return monomial(Monomial(), std::move(c)); }
  static Poly variable(Var v, std::uint32_t exponent = 1) {
    return monomial(Monomial::variable(v, exponent), K(1));
  }
  static Poly monomial(Monomial m, K c) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }
  static Poly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    return p;
  }

  // Terms in canonical monomial storage order.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  std::uint32_t degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.exponent(v));
    return d;
  }
  std::set<Var> variables() const {
    std::set<Var> vars;
    for (const auto& t : terms_) {
      for (const auto& e : t.first.entries()) vars.insert(e.first);
    }
    return vars;
  }
  K coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    return (it != terms_.end() && it->first == m) ? it->second : K();
  }
  K constant_term() const { return coefficient(Monomial()); }

  // Largest term under `order`. Precondition: nonzero.
  const Term& lead(const MonomialOrder& order) const {
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
      if (order.compare(t.first, best->first) > 0) best = &t;
    }
    return *best;
  }
  // Terms sorted descending under `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.first, b.first) > 0; });
    return out;
  }

  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) prod.emplace_back(s.first * t.first, s.second * t.second);
    }
    return from_terms(std::move(prod));
  }
  friend Poly operator*(const K& c, const Poly& p) {
    if (c.is_zero()) return {};
    Poly out = p;
    for (auto& t : out.terms_) t.second = c * t.second;
    return out;
  }
  Poly operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
  }
  // Multiplication by a monomial keeps the canonical order intact only up to
  // re-sorting, so it goes through from_terms.
  Poly times(const Monomial& m, const K& c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first * m, c * t.second);
    return from_terms(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].first == b.terms_[k].first) || !(a.terms_[k].second == b.terms_[k].second)) {
        return false;
      }
    }
    return true;
  }

  template <class F>
  auto map_coefficients(F f) const -> Poly<decltype(f(std::declval<const K&>()))> {
    using R = decltype(f(std::declval<const K&>()));
    std::vector<typename Poly<R>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
    return Poly<R>::from_terms(std::move(out));
  }

 private:
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) {
        c = 1;
      } else if (j == b.terms_.size()) {
        c = -1;
      } else {
        auto o = a.terms_[i].first <=> b.terms_[j].first;
        c = o < 0 ? -1 : (o > 0 ? 1 : 0);
      }
      if (c < 0) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (c > 0) {
        Term t = b.terms_[j++];
        if (subtract) t.second = -t.second;
        out.terms_.push_back(std::move(t));
      } else {
        K s = a.terms_[i].second;
        if (subtract) {
          s -= b.terms_[j].second;
        } else {
          s += b.terms_[j].second;
        }
        if (!s.is_zero()) out.terms_.emplace_back(a.terms_[i].first, std::move(s));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

template <class K>
Poly<K> pow(const Poly<K>& base, unsigned exponent) {
  Poly<K> acc = Poly<K>::constant(K(1));
  Poly<K> b = base;
  while (exponent > 0) {
    if (exponent & 1U) acc *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return acc;
}

using StdPoly = Poly<GaussianRational>;
using ExtPoly = Poly<LCNumber>;

inline ExtPoly extend(const StdPoly& p) {
  return p.map_coefficients([](const GaussianRational& c) { return LCNumber(c); });
}

inline std::vector<ExtPoly> extend(const std::vector<StdPoly>& ps) {
  std::vector<ExtPoly> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(extend(p));
  return out;
}

// The standard-domain polynomial when every coefficient is a plain element of Q(i).
inline std::optional<StdPoly> as_standard(const ExtPoly& p) {
  std::vector<StdPoly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    if (!c.is_standard()) return std::nullopt;
    out.emplace_back(m, c.coefficient_at(Rational(0)));
  }
  return StdPoly::from_terms(std::move(out));
}

}  // namespace nsag
