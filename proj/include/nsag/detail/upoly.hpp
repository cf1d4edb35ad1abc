#pragma once

// Dense univariate polynomials over Q(i); index k holds the coefficient of t^k.

#include <utility>
#include <vector>

#include "nsag/gaussian.hpp"

namespace nsag::upoly {

using Dense = std::vector<GaussianRational>;

inline void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const Dense& p) { return static_cast<int>(p.size()) - 1; }

// Quotient and remainder; divisor must be nonzero.
inline std::pair<Dense, Dense> divmod(Dense num, const Dense& den) {
  Dense q;
  const int dd = degree(den);
  trim(num);
  if (degree(num) < dd) return {q, num};
  q.assign(num.size() - den.size() + 1, GaussianRational(0));
  const GaussianRational inv_lead = den.back().inverse();
  for (int k = degree(num) - dd; k >= 0; --k) {
    GaussianRational c = num[k + dd] * inv_lead;
    if (c.is_zero()) continue;
    q[k] = c;
    for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  trim(q);
  return {q, num};
}

inline Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  const GaussianRational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

inline Dense gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

inline Dense derivative(const Dense& p) {
  Dense d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussianRational(static_cast<long>(k)));
  trim(d);
  return d;
}

inline GaussianRational eval(const Dense& p, const GaussianRational& x) {
  GaussianRational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace nsag::upoly
