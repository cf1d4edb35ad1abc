#include "nsag/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "nsag/detail/upoly.hpp"
#include "nsag/errors.hpp"

namespace nsag {

PointAssignment point_shadow(const PointAssignment& p) {
  PointAssignment out;
  for (const auto& [v, x] : p.values()) {
    if (is_unlimited(x)) {
      throw AlgebraError(ErrorCode::kUnlimitedValue, "coordinate " + var_name(v) + " is unlimited: " + to_string(x));
    }
    out.set(v, LCNumber(lc_st(x)));
  }
  return out;
}

bool halo_member(const PointAssignment& p, const PointAssignment& a) {
  if (p.size() != a.size()) throw AlgebraError(ErrorCode::kSupportMismatch, "points assign different variables");
  bool inside = true;
  for (const auto& [v, x] : p.values()) {
    const LCNumber* y = a.find(v);
    if (y == nullptr) {
      throw AlgebraError(ErrorCode::kSupportMismatch, "variable " + var_name(v) + " is missing from the center");
    }
    inside = inside && is_infinitesimal(x - *y);
  }
  return inside;
}

namespace {

upoly::Dense to_dense(const StdPoly& f, Var v) {
  upoly::Dense out(f.degree_in(v) + 1, GaussianRational(0));
  for (const auto& [m, c] : f.terms()) out[m.exponent(v)] += c;
  upoly::trim(out);
  return out;
}

StdPoly from_dense(const upoly::Dense& p, Var v) {
  std::vector<StdPoly::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k) terms.emplace_back(Monomial::variable(v, static_cast<std::uint32_t>(k)), p[k]);
  return StdPoly::from_terms(std::move(terms));
}

std::vector<LCNumber> to_dense_ext(const ExtPoly& f, Var v) {
  std::vector<LCNumber> out(f.degree_in(v) + 1);
  for (const auto& [m, c] : f.terms()) out[m.exponent(v)] += c;
  return out;
}

upoly::Dense squarefree(const upoly::Dense& p) {
  const upoly::Dense g = upoly::gcd(p, upoly::derivative(p));
  return upoly::divmod(p, g).first;
}

// Q(i)-span of standard polynomials in echelon form. Each row is monic at its
// last term and has zero coefficient at the pivots of earlier rows.
class Span {
 public:
  StdPoly reduce(StdPoly p) const {
    for (const auto& r : rows_) {
      const GaussianRational c = p.coefficient(r.terms().back().first);
      if (!c.is_zero()) p -= c * r;
    }
    return p;
  }
  bool add(const StdPoly& p) {
    StdPoly r = reduce(p);
    if (r.is_zero()) return false;
    rows_.push_back(r.terms().back().second.inverse() * r);
    return true;
  }

 private:
  std::vector<StdPoly> rows_;
};

StdPoly eps_level(const ExtPoly& h, const Rational& q) {
  std::vector<StdPoly::Term> terms;
  for (const auto& [m, c] : h.terms()) terms.emplace_back(m, c.coefficient_at(q));
  return StdPoly::from_terms(std::move(terms));
}

// Writes h = sum_q eps^q h_q and returns the coefficient lambda of b when every
// h_q is expanded in a basis of span{b, h_q} that contains b. h - lambda*b then
// spans a space of one dimension less. b must lie in that span.
LCNumber component_along(const ExtPoly& h, const StdPoly& b) {
  std::vector<Rational> levels;
  for (const auto& [m, c] : h.terms()) {
    for (const auto& t : c.terms()) levels.push_back(t.exponent);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  Span all, rest;
  all.add(b);
  for (const auto& q : levels) {
    const StdPoly hq = eps_level(h, q);
    if (all.add(hq)) rest.add(hq);
  }
  const StdPoly rb = rest.reduce(b);
  const auto& [pivot, c0] = rb.terms().front();
  std::vector<LCTerm> terms;
  for (const auto& q : levels) terms.push_back({q, rest.reduce(eps_level(h, q)).coefficient(pivot) / c0});
  return LCNumber::from_terms(std::move(terms));
}

}  // namespace

VarietyPresentation::VarietyPresentation(std::vector<Var> ambient, std::vector<StdPoly> generators)
    : ambient_(std::move(ambient)), ideal_(generators), extended_(extend(generators)) {}

bool VarietyPresentation::radical_spot_check() const {
  std::vector<StdPoly> candidates;
  for (Var v : ambient_) candidates.push_back(StdPoly::variable(v));
  for (const auto& g : generators()) {
    const auto vars = g.variables();
    if (vars.size() != 1) continue;
    const Var v = *vars.begin();
    candidates.push_back(from_dense(squarefree(to_dense(g, v)), v));
  }
  for (const auto& h : candidates) {
    if (radical_member(h, ideal_) && !ideal_member(h, ideal_)) return false;
  }
  return true;
}

VarietyReduction reduce_on_variety(const ExtPoly& f, const VarietyPresentation& X) {
  poly_shadow(f);
  VarietyReduction out;
  if (ideal_member(f, X.extended_ideal())) {
    out.all_of_x = true;
    out.same_ideal = true;
    return out;
  }
  ExtPoly h = f;
  StdPoly sh = poly_shadow(h);
  if (sh.is_zero() || radical_member(sh, X.ideal())) {
    for (;;) {
      ++out.iterations;
      h = max_abs_normalize(h);
      sh = poly_shadow(h);
      if (!radical_member(sh, X.ideal())) break;
      if (!ideal_member(sh, X.ideal())) {
        throw AlgebraError(ErrorCode::kInvalidArgument, "variety presentation is not radical: " + format_poly(sh));
      }
      h -= ExtPoly::constant(component_along(h, sh)) * extend(sh);
    }
  }
  out.g = h;
  std::vector<ExtPoly> with_f = extend(X.generators());
  std::vector<ExtPoly> with_g = with_f;
  with_f.push_back(f);
  with_g.push_back(h);
  out.same_ideal = ideal_member(h, ExtIdeal(with_f)) && ideal_member(f, ExtIdeal(with_g));
  return out;
}

namespace {

using Complex = std::complex<long double>;

long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

std::vector<Complex> aberth_roots(const upoly::Dense& p) {
  const int n = upoly::degree(p);
  std::vector<Complex> a(p.size());
  const GaussianRational inv = p.back().inverse();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const GaussianRational c = p[k] * inv;
    a[k] = Complex(to_ld(c.re()), to_ld(c.im()));
  }
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(a[k]));
  radius += 1;
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, 2.0L * 3.14159265358979323846L * k / n + 0.4L);
  auto eval = [&](const Complex& x, Complex& d) {
    Complex v = a[n];
    d = 0;
    for (int k = n - 1; k >= 0; --k) {
      d = d * x + v;
      v = v * x + a[k];
    }
    return v;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    long double step = 0;
    for (int k = 0; k < n; ++k) {
      Complex d;
      const Complex v = eval(z[k], d);
      if (v == Complex(0)) continue;
      const Complex ratio = v / d;
      Complex sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      }
      const Complex w = ratio / (1.0L - ratio * sum);
      z[k] -= w;
      step = std::max(step, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (step < 1e-17L) break;
  }
  return z;
}

std::optional<Rational> rationalize(long double x) {
  const bool negative = x < 0;
  long double r = std::fabs(x);
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 48; ++step) {
    const long double fl = std::floor(r);
    if (fl > 1e15L) break;
    const Integer a(static_cast<unsigned long>(fl));
    Integer h2 = a * h1 + h0;
    Integer k2 = a * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const long double approx = static_cast<long double>(h1.get_d()) / static_cast<long double>(k1.get_d());
    if (std::fabs(approx - std::fabs(x)) <= 1e-11L * std::max(1.0L, std::fabs(x))) {
      Rational q(h1, k1);
      q.canonicalize();
      return negative ? Rational(-q) : q;
    }
    const long double frac = r - fl;
    if (frac < 1e-30L) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

// Exactly verified roots of p in Q(i).
std::vector<GaussianRational> gaussian_roots(const upoly::Dense& p) {
  std::vector<GaussianRational> out;
  const upoly::Dense q = squarefree(p);
  const int n = upoly::degree(q);
  if (n < 1) return out;
  if (n == 1) {
    out.push_back(-q[0] / q[1]);
    return out;
  }
  if (n == 2) {
    const GaussianRational disc = q[1] * q[1] - GaussianRational(4) * q[2] * q[0];
    if (auto s = gaussian_nth_root(disc, 2)) {
      const GaussianRational den = GaussianRational(2) * q[2];
      out.push_back((-q[1] + *s) / den);
      out.push_back((-q[1] - *s) / den);
    }
    return out;
  }
  for (const Complex& z : aberth_roots(q)) {
    auto re = rationalize(z.real());
    auto im = rationalize(z.imag());
    if (!re || !im) continue;
    GaussianRational c(*re, *im);
    if (upoly::eval(q, c).is_zero()) out.push_back(c);
  }
  return out;
}

GaussianRational preferred(const std::vector<GaussianRational>& roots) {
  GaussianRational best = roots.front();
  for (const auto& r : roots) {
    if (lex_less(best, r)) best = r;
  }
  return best;
}

// c(u) <- c(u + s), coefficients truncated above `cap`.
void taylor_shift(std::vector<LCNumber>& c, const LCNumber& s, const Rational& cap) {
  const std::size_t n = c.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      c[j - 1] = (c[j - 1] + s * c[j]).truncated(cap);
    }
  }
}

struct LiftAttempt {
  LCNumber xi;
  bool done;
};

LiftAttempt lift_once(std::vector<LCNumber> c, const GaussianRational& a, const Rational& target, const Rational& cap) {
  LCNumber xi(a);
  for (auto& x : c) x = x.truncated(cap);
  taylor_shift(c, LCNumber(a), cap);
  for (int step = 0; step < 100000; ++step) {
    if (c[0].is_zero()) return {xi, true};
    const Rational v0 = c[0].valuation().value();
    if (v0 > target) return {xi, true};
    std::optional<Rational> best;
    std::size_t end = 0;
    for (std::size_t k = 1; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      Rational slope = (c[k].valuation().value() - v0) / Rational(static_cast<long>(k));
      if (!best || slope <= *best) {
        best = slope;
        end = k;
      }
    }
    if (!best || sgn(*best) >= 0) return {xi, false};
    const Rational gamma = -*best;
    upoly::Dense phi(end + 1, GaussianRational(0));
    for (std::size_t k = 0; k <= end; ++k) {
      if (c[k].is_zero()) continue;
      if (c[k].valuation().value() - v0 == *best * Rational(static_cast<long>(k))) phi[k] = c[k].leading_term().coeff;
    }
    GaussianRational y;
    std::size_t nonzero = 0;
    for (const auto& x : phi) nonzero += x.is_zero() ? 0 : 1;
    if (nonzero == 2) {
      auto r = gaussian_nth_root(-phi[0] / phi[end], static_cast<unsigned>(end));
      if (!r) {
        throw AlgebraError(ErrorCode::kNonConstructibleRoot,
                           "Newton polygon step needs a root of " + to_string(-phi[0] / phi[end]) + " of order " +
                               std::to_string(end));
      }
      y = *r;
    } else {
      const auto roots = gaussian_roots(phi);
      if (roots.empty()) {
        throw AlgebraError(ErrorCode::kNonConstructibleRoot, "Newton polygon step has no root in Q(i)");
      }
      y = preferred(roots);
    }
    const LCNumber s = LCNumber::monomial(y, gamma);
    xi += s;
    taylor_shift(c, s, cap);
  }
  return {xi, false};
}

}  // namespace

PointAssignment newton_puiseux_lift(const ExtPoly& f, const GaussianRational& a, const TruncationOrder& t) {
  const auto vars = f.variables();
  if (f.is_zero()) throw AlgebraError(ErrorCode::kZeroPolynomial, "cannot lift a root of the zero polynomial");
  if (vars.empty()) throw AlgebraError(ErrorCode::kNotAShadowRoot, "a nonzero constant has no roots");
  if (vars.size() > 1) throw AlgebraError(ErrorCode::kInvalidArgument, "lifting needs a univariate polynomial");
  const Var v = *vars.begin();
  const ExtPoly fn = max_abs_normalize(f);
  const StdPoly sh = poly_shadow(fn);
  if (!upoly::eval(to_dense(sh, v), a).is_zero()) {
    throw AlgebraError(ErrorCode::kNotAShadowRoot, to_string(a) + " is not a root of the shadow " + format_poly(sh));
  }
  // f = fn * eps^shift up to a standard factor.
  const auto& [m0, c0] = f.terms().front();
  const Rational shift = c0.valuation().value() - fn.coefficient(m0).valuation().value();
  const Rational target = t.order - shift;
  Rational margin = abs(target) + 4;
  const std::vector<LCNumber> dense = to_dense_ext(fn, v);
  for (int attempt = 0; attempt < 4; ++attempt) {
    const Rational cap = (sgn(target) > 0 ? target : Rational(0)) + margin;
    const LiftAttempt r = lift_once(dense, a, target, cap);
    PointAssignment p;
    p.set(v, r.xi);
    const LCNumber residual = poly_eval(f, p);
    if (r.done && (residual.is_zero() || residual.valuation().value() > t.order)) return p;
    margin *= 2;
  }
  throw AlgebraError(ErrorCode::kNonConstructibleRoot, "lift did not reach the truncation order");
}

PointAssignment open_shadow_witness(const ExtPoly& f, const PointAssignment& a, std::uint32_t seed) {
  if (f.is_zero()) throw AlgebraError(ErrorCode::kEmptyOpen, "the zero polynomial vanishes everywhere");
  if (!poly_eval(f, a).is_zero()) return a;
  const std::set<Var> vars = f.variables();
  const Var u = *vars.rbegin() + 1;
  const ExtPoly ep = ExtPoly::constant(LCNumber::epsilon());

  auto try_direction = [&](const std::map<Var, long>& d) -> std::optional<PointAssignment> {
    AffineSubstitution s;
    for (Var v : vars) {
      auto it = d.find(v);
      const long dv = it == d.end() ? 0 : it->second;
      s.set(v, ExtPoly::constant(*a.find(v)) + ExtPoly::constant(LCNumber(dv)) * ExtPoly::variable(u));
    }
    const ExtPoly line = apply_substitution(f, s);
    if (line.is_zero()) return std::nullopt;
    const long deg = line.total_degree();
    for (long c = 1; c <= deg + 1; ++c) {
      PointAssignment xi = a;
      for (const auto& [v, dv] : d) xi.set(v, *a.find(v) + LCNumber::epsilon() * LCNumber(c * dv));
      if (!poly_eval(f, xi).is_zero()) return xi;
    }
    return std::nullopt;
  };

  for (Var v : vars) {
    if (auto xi = try_direction({{v, 1}})) return *xi;
  }
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::map<Var, long> d;
    bool nonzero = false;
    for (Var v : vars) {
      const long dv = static_cast<long>(rng() % 7) - 3;
      d[v] = dv;
      nonzero = nonzero || dv != 0;
    }
    if (!nonzero) continue;
    if (auto xi = try_direction(d)) return *xi;
  }
  throw AlgebraError(ErrorCode::kInvalidArgument, "no direction found");
}

ShadowClosureReport verify_shadow_closure(const std::vector<LCNumber>& roots, const TruncationOrder& t) {
  if (roots.empty()) throw AlgebraError(ErrorCode::kInvalidArgument, "closure check needs at least one root");
  const Var v = z(1);
  ShadowClosureReport rep;
  rep.roots = roots;
  rep.f = ExtPoly::constant(LCNumber(1));
  for (const auto& r : roots) rep.f *= ExtPoly::variable(v) - ExtPoly::constant(r);

  for (const auto& r : roots) {
    if (!is_limited(r)) continue;
    const GaussianRational s = lc_st(r);
    if (std::find(rep.lhs.begin(), rep.lhs.end(), s) == rep.lhs.end()) rep.lhs.push_back(s);
  }
  std::sort(rep.lhs.begin(), rep.lhs.end(), lex_less);

  const VarietyPresentation line({v}, {});
  const VarietyReduction red = reduce_on_variety(max_abs_normalize(rep.f), line);
  rep.reduced_shadow = poly_shadow(red.g);
  upoly::Dense rest = to_dense(rep.reduced_shadow, v);
  for (const auto& c : rep.lhs) {
    bool root = false;
    while (upoly::degree(rest) > 0 && upoly::eval(rest, c).is_zero()) {
      rest = upoly::divmod(rest, upoly::Dense{-c, GaussianRational(1)}).first;
      root = true;
    }
    if (root) rep.rhs.push_back(c);
  }
  rep.rhs_complete = upoly::degree(rest) == 0;

  bool witnesses_ok = true;
  for (const auto& c : rep.lhs) {
    LiftWitness w;
    w.point = c;
    w.lift = *newton_puiseux_lift(rep.f, c, t).find(v);
    PointAssignment p;
    p.set(v, w.lift);
    w.residual = poly_eval(rep.f, p).valuation();
    w.residual_ok = w.residual > Valuation(t.order);
    w.in_halo = is_infinitesimal(w.lift - LCNumber(c));
    bool first = true;
    for (const auto& r : roots) {
      const Valuation d = (w.lift - r).valuation();
      if (first || d > w.distance) {
        w.distance = d;
        w.closest_root = r;
        first = false;
      }
    }
    w.closest_in_halo = is_limited(w.closest_root) && lc_st(w.closest_root) == c;
    witnesses_ok = witnesses_ok && w.residual_ok && w.in_halo && w.closest_in_halo;
    rep.witnesses.push_back(std::move(w));
  }
  rep.pass = rep.lhs == rep.rhs && rep.rhs_complete && witnesses_ok;
  return rep;
}

}  // namespace nsag
