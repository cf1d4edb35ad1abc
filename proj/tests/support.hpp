#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "nsag/groebner.hpp"
#include "nsag/lcfield.hpp"
#include "nsag/polyring.hpp"

namespace nsag::testing {

using Rng = std::mt19937;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline GaussianRational small_gaussian(Rng& rng, bool allow_zero = true) {
  for (;;) {
    Rational re(uniform(rng, -3, 3), uniform(rng, 1, 3));
    Rational im = uniform(rng, 0, 2) == 0 ? Rational(uniform(rng, -2, 2)) : Rational(0);
    re.canonicalize();
    GaussianRational c(re, im);
    if (allow_zero || !c.is_zero()) return c;
  }
}

inline Rational pick_exponent(Rng& rng, const std::vector<Rational>& choices) {
  return choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(choices.size()) - 1))];
}

inline const std::vector<Rational>& default_exponents() {
  static const std::vector<Rational> e{Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(3, 2),
                                       Rational(2)};
  return e;
}

inline LCNumber random_lc(Rng& rng, int max_terms = 3, const std::vector<Rational>& exps = default_exponents()) {
  std::vector<LCTerm> terms;
  const long n = uniform(rng, 0, max_terms);
  for (long i = 0; i < n; ++i) terms.push_back({pick_exponent(rng, exps), small_gaussian(rng, false)});
  return LCNumber::from_terms(std::move(terms));
}

inline LCNumber random_limited(Rng& rng, int max_terms = 3) {
  static const std::vector<Rational> e{Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return random_lc(rng, max_terms, e);
}

inline Monomial random_monomial(Rng& rng, std::uint32_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial::Entry> entries;
  const long d = uniform(rng, 0, max_degree);
  for (long k = 0; k < d; ++k) entries.emplace_back(z(static_cast<std::uint32_t>(uniform(rng, 1, nvars))), 1);
  return Monomial::from_entries(std::move(entries));
}

inline StdPoly random_std_poly(Rng& rng, std::uint32_t nvars, std::uint32_t max_degree, int max_terms = 3) {
  std::vector<StdPoly::Term> terms;
  const long n = uniform(rng, 1, max_terms);
  for (long i = 0; i < n; ++i) terms.emplace_back(random_monomial(rng, nvars, max_degree), small_gaussian(rng, false));
  return StdPoly::from_terms(std::move(terms));
}

template <class CoeffGen>
ExtPoly random_ext_poly(Rng& rng, std::uint32_t nvars, std::uint32_t max_degree, int max_terms, CoeffGen coeff) {
  std::vector<ExtPoly::Term> terms;
  const long n = uniform(rng, 1, max_terms);
  for (long i = 0; i < n; ++i) terms.emplace_back(random_monomial(rng, nvars, max_degree), coeff(rng));
  return ExtPoly::from_terms(std::move(terms));
}

inline PointAssignment random_point(Rng& rng, std::uint32_t nvars, bool standard) {
  PointAssignment p;
  for (std::uint32_t v = 1; v <= nvars; ++v) {
    p.set(z(v), standard ? LCNumber(small_gaussian(rng)) : random_limited(rng));
  }
  return p;
}

// All monomials in z1..zn of total degree <= d.
inline std::vector<Monomial> monomials_up_to(std::uint32_t nvars, std::uint32_t d) {
  std::vector<Monomial> out{Monomial()};
  std::vector<Monomial> layer{Monomial()};
  for (std::uint32_t k = 1; k <= d; ++k) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      const std::uint32_t from = m.is_one() ? 1 : m.entries().back().first;
      for (std::uint32_t v = from; v <= nvars; ++v) next.push_back(m * Monomial::variable(z(v)));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

// Sparse linear system over Q(i): rows are equations, keyed by column index.
class LinearSystem {
 public:
  using Row = std::map<std::size_t, GaussianRational>;

  void add(Row row, GaussianRational rhs) {
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
  }

  // Gaussian elimination; returns one solution or nothing when inconsistent.
  std::optional<std::vector<GaussianRational>> solve(std::size_t unknowns) const {
    std::vector<Row> rows = rows_;
    std::vector<GaussianRational> rhs = rhs_;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
      std::size_t p = r;
      while (p < rows.size() && rows[p].count(col) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      std::swap(rhs[p], rhs[r]);
      const GaussianRational inv = rows[r].at(col).inverse();
      for (auto& [c, v] : rows[r]) v *= inv;
      rhs[r] *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        auto it = rows[i].find(col);
        if (it == rows[i].end()) continue;
        const GaussianRational factor = it->second;
        for (const auto& [c, v] : rows[r]) {
          GaussianRational& slot = rows[i][c];
          slot -= factor * v;
          if (slot.is_zero()) rows[i].erase(c);
        }
        rhs[i] -= factor * rhs[r];
      }
      pivots.emplace_back(r, col);
      ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (!rhs[i].is_zero()) return std::nullopt;
    }
    std::vector<GaussianRational> x(unknowns);
    for (const auto& [row, col] : pivots) x[col] = rhs[row];
    return x;
  }

  // Dimension of the solution space of the homogeneous system, and a basis.
  std::vector<std::vector<GaussianRational>> nullspace(std::size_t unknowns) const {
    std::vector<Row> rows = rows_;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < unknowns && r < rows.size(); ++col) {
      std::size_t p = r;
      while (p < rows.size() && rows[p].count(col) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      const GaussianRational inv = rows[r].at(col).inverse();
      for (auto& [c, v] : rows[r]) v *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r) continue;
        auto it = rows[i].find(col);
        if (it == rows[i].end()) continue;
        const GaussianRational factor = it->second;
        for (const auto& [c, v] : rows[r]) {
          GaussianRational& slot = rows[i][c];
          slot -= factor * v;
          if (slot.is_zero()) rows[i].erase(c);
        }
      }
      pivot_col.push_back(col);
      ++r;
    }
    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < unknowns; ++free) {
      if (is_pivot[free]) continue;
      std::vector<GaussianRational> x(unknowns);
      x[free] = GaussianRational(1);
      for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        auto it = rows[i].find(free);
        if (it != rows[i].end()) x[pivot_col[i]] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::vector<Row> rows_;
  std::vector<GaussianRational> rhs_;
};

// f = sum c_i g_i with every cofactor of degree <= d, decided by linear algebra.
inline bool brute_force_member(const StdPoly& f, const std::vector<StdPoly>& gens, std::uint32_t nvars, std::uint32_t d) {
  const auto monos = monomials_up_to(nvars, d);
  std::map<Monomial, std::size_t> eq_index;
  std::vector<LinearSystem::Row> rows;
  auto row_of = [&](const Monomial& m) -> LinearSystem::Row& {
    auto [it, fresh] = eq_index.emplace(m, rows.size());
    if (fresh) rows.emplace_back();
    return rows[it->second];
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const std::size_t col = i * monos.size() + j;
      for (const auto& [m, c] : gens[i].terms()) row_of(monos[j] * m)[col] += c;
    }
  }
  for (const auto& [m, c] : f.terms()) row_of(m);
  LinearSystem sys;
  for (const auto& [m, idx] : eq_index) sys.add(rows[idx], f.coefficient(m));
  return sys.solve(gens.size() * monos.size()).has_value();
}

// Basis of {x : sum a_i x_i = 0, deg x_i <= d} over Q(i).
inline std::vector<std::vector<StdPoly>> bounded_syzygies(const std::vector<StdPoly>& a, std::uint32_t nvars,
                                                          std::uint32_t d) {
  const auto monos = monomials_up_to(nvars, d);
  std::map<Monomial, LinearSystem::Row> eqs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      for (const auto& [m, c] : a[i].terms()) eqs[monos[j] * m][i * monos.size() + j] += c;
    }
  }
  LinearSystem sys;
  for (auto& [m, row] : eqs) sys.add(std::move(row), GaussianRational(0));
  std::vector<std::vector<StdPoly>> out;
  for (const auto& x : sys.nullspace(a.size() * monos.size())) {
    std::vector<StdPoly> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < monos.size(); ++j) v[i] += StdPoly::monomial(monos[j], x[i * monos.size() + j]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// The slice of an extended polynomial at a single eps exponent.
inline StdPoly eps_slice(const ExtPoly& f, const Rational& q) {
  std::vector<StdPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, c.coefficient_at(q));
  return StdPoly::from_terms(std::move(terms));
}

inline std::vector<Rational> eps_exponents(const std::vector<ExtPoly>& fs) {
  std::vector<Rational> out;
  for (const auto& f : fs) {
    for (const auto& [m, c] : f.terms()) {
      for (const auto& t : c.terms()) out.push_back(t.exponent);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class K>
Poly<K> dot(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b) {
  Poly<K> s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace nsag::testing
