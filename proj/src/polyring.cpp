#include "nsag/polyring.hpp"

#include "nsag/errors.hpp"

namespace nsag {

bool PointAssignment::is_standard() const {
  for (const auto& [v, x] : values_) {
    if (!x.is_standard()) return false;
  }
  return true;
}

namespace {

template <class K>
LCNumber eval_impl(const Poly<K>& f, const PointAssignment& p) {
  std::map<std::pair<Var, std::uint32_t>, LCNumber> powers;
  LCNumber acc;
  for (const auto& [m, c] : f.terms()) {
    LCNumber value{c};
    for (const auto& [v, e] : m.entries()) {
      const LCNumber* x = p.find(v);
      if (x == nullptr) {
        throw AlgebraError(ErrorCode::kUnassignedVariable, "variable " + var_name(v) + " is not assigned");
      }
      auto [it, fresh] = powers.try_emplace({v, e});
      if (fresh) it->second = pow(*x, e);
      value *= it->second;
    }
    acc += value;
  }
  return acc;
}

}  // namespace

LCNumber poly_eval(const ExtPoly& f, const PointAssignment& p) { return eval_impl(f, p); }
LCNumber poly_eval(const StdPoly& f, const PointAssignment& p) { return eval_impl(f, p); }

StdPoly poly_shadow(const ExtPoly& f) {
  std::vector<StdPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    if (is_unlimited(c)) {
      throw AlgebraError(ErrorCode::kUnlimitedCoefficient,
                         "coefficient of " + to_string(m) + " is unlimited: " + to_string(c));
    }
    out.emplace_back(m, c.coefficient_at(Rational(0)));
  }
  return StdPoly::from_terms(std::move(out));
}

ExtPoly max_abs_normalize(const ExtPoly& f) {
  if (f.is_zero()) throw AlgebraError(ErrorCode::kZeroPolynomial, "cannot normalize the zero polynomial");
  const auto terms = f.sorted_terms(MonomialOrder::grevlex());
  const LCNumber* best = &terms.front().second;
  for (const auto& t : terms) {
    if (lc_abs_cmp(t.second, *best) > 0) best = &t.second;
  }
  const LCTerm& lead = best->leading_term();
  const LCNumber unit = LCNumber::monomial(lead.coeff.inverse(), Rational(-lead.exponent));
  return unit * f;
}

InfApSplit split_inf_ap(const ExtPoly& f) {
  std::vector<ExtPoly::Term> inf;
  std::vector<ExtPoly::Term> ap;
  for (const auto& [m, c] : f.terms()) {
    if (is_unlimited(c)) {
      throw AlgebraError(ErrorCode::kUnlimitedCoefficient,
                         "coefficient of " + to_string(m) + " is unlimited: " + to_string(c));
    }
    (is_infinitesimal(c) ? inf : ap).emplace_back(m, c);
  }
  return {ExtPoly::from_terms(std::move(inf)), ExtPoly::from_terms(std::move(ap))};
}

AffineSubstitution AffineSubstitution::identity(const std::set<Var>& vars) {
  AffineSubstitution s;
  for (Var v : vars) s.images_[v] = ExtPoly::variable(v);
  return s;
}

AffineSubstitution AffineSubstitution::translation(const std::map<Var, LCNumber>& shift) {
  AffineSubstitution s;
  for (const auto& [v, c] : shift) s.images_[v] = ExtPoly::variable(v) + ExtPoly::constant(c);
  return s;
}

void AffineSubstitution::set(Var source, ExtPoly image) {
  if (image.total_degree() > 1) {
    throw AlgebraError(ErrorCode::kInvalidArgument, "substitution image for " + var_name(source) + " is not affine");
  }
  images_[source] = std::move(image);
}

namespace {

// Fraction-free (Bareiss) determinant over the finite-sum ring.
LCNumber determinant(std::vector<std::vector<LCNumber>> a) {
  const std::size_t n = a.size();
  LCNumber sign(1);
  LCNumber prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LCNumber num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = *lc_divide_exact(num, prev);
      }
      a[i][k] = LCNumber();
    }
    prev = a[k][k];
  }
  return n == 0 ? LCNumber(1) : sign * a[n - 1][n - 1];
}

}  // namespace

bool AffineSubstitution::is_invertible() const {
  std::set<Var> targets;
  for (const auto& [v, image] : images_) {
    for (Var t : image.variables()) targets.insert(t);
  }
  if (targets.size() != images_.size()) return false;
  std::vector<std::vector<LCNumber>> m;
  for (const auto& [v, image] : images_) {
    std::vector<LCNumber> row;
    for (Var t : targets) row.push_back(image.coefficient(Monomial::variable(t)));
    m.push_back(std::move(row));
  }
  return !determinant(std::move(m)).is_zero();
}

ExtPoly apply_substitution(const ExtPoly& f, const AffineSubstitution& s) {
  std::map<std::pair<Var, std::uint32_t>, ExtPoly> powers;
  ExtPoly acc;
  for (const auto& [m, c] : f.terms()) {
    ExtPoly value = ExtPoly::constant(c);
    for (const auto& [v, e] : m.entries()) {
      auto it = s.images().find(v);
      if (it == s.images().end()) {
        throw AlgebraError(ErrorCode::kUnassignedVariable, "substitution does not map " + var_name(v));
      }
      auto [pit, fresh] = powers.try_emplace({v, e});
      if (fresh) pit->second = pow(it->second, e);
      value *= pit->second;
    }
    acc += value;
  }
  return acc;
}

ExtPoly partial_eval(const ExtPoly& f, const PointAssignment& p) {
  std::vector<ExtPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    LCNumber coeff = c;
    std::vector<Monomial::Entry> rest;
    for (const auto& [v, e] : m.entries()) {
      if (const LCNumber* x = p.find(v)) {
        coeff *= pow(*x, e);
      } else {
        rest.emplace_back(v, e);
      }
    }
    out.emplace_back(Monomial::from_entries(std::move(rest)), std::move(coeff));
  }
  return ExtPoly::from_terms(std::move(out));
}

StdPoly partial_eval(const StdPoly& f, Var v, const GaussianRational& value) {
  std::vector<StdPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = m.exponent(v);
    std::vector<Monomial::Entry> rest;
    for (const auto& entry : m.entries()) {
      if (entry.first != v) rest.push_back(entry);
    }
    out.emplace_back(Monomial::from_entries(std::move(rest)), c * pow(value, e));
  }
  return StdPoly::from_terms(std::move(out));
}

}  // namespace nsag
