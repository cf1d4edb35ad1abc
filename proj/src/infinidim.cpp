#include "nsag/infinidim.hpp"

#include <algorithm>

#include "nsag/errors.hpp"

namespace nsag {

PointIdealResult is_point_ideal(const StdIdeal& I) {
  const StdIdeal lex(I.generators(), MonomialOrder::lex());
  if (!is_proper(lex)) return {std::nullopt, "improper"};
  PointAssignment p;
  for (const auto& g : lex.basis()) {
    const auto& terms = g.terms();
    // Storage order puts the constant monomial first.
    const bool linear = (terms.size() == 1 || (terms.size() == 2 && terms[0].first.is_one())) &&
                        terms.back().first.degree() == 1 && terms.back().second.is_one();
    if (!linear) return {std::nullopt, "not a point ideal"};
    const Var v = terms.back().first.entries().front().first;
    p.set(v, LCNumber(terms.size() == 2 ? -terms[0].second : GaussianRational(0)));
  }
  return {p, ""};
}

bool radical_nullstellensatz(const StdPoly& g, const StdIdeal& J) {
  std::set<Var> vars = J.variables();
  for (Var v : g.variables()) vars.insert(v);
  std::uint32_t n = 0;
  bool has_w = false;
  for (Var v : vars) {
    if (is_z(v)) {
      n = std::max(n, v);
    } else {
      has_w = true;
    }
  }
  return radical_member(g, has_w ? J : contraction(J, n));
}

namespace {

bool all_in_radical(const std::vector<StdPoly>& gens, const StdIdeal& I) {
  for (const auto& g : gens) {
    if (!radical_member(g, I)) return false;
  }
  return true;
}

bool all_in(const std::vector<StdPoly>& gens, const StdIdeal& I) {
  for (const auto& g : gens) {
    if (!ideal_member(g, I)) return false;
  }
  return true;
}

}  // namespace

VarietyIdentityReport variety_identity_check(const StdIdeal& I, const StdIdeal& J) {
  const StdIdeal product = ideal_combine(IdealOp::kProduct, I, J);
  const StdIdeal meet = ideal_combine(IdealOp::kIntersection, I, J);
  const StdIdeal sum = ideal_combine(IdealOp::kSum, I, J);
  VarietyIdentityReport r;
  r.product_in_intersection = all_in_radical(product.generators(), meet);
  r.intersection_in_product = all_in_radical(meet.generators(), product);
  r.intersection_in_each = all_in(meet.generators(), I) && all_in(meet.generators(), J);
  r.each_in_sum = all_in(I.generators(), sum) && all_in(J.generators(), sum);
  r.pass = r.product_in_intersection && r.intersection_in_product && r.intersection_in_each && r.each_in_sum;
  return r;
}

RationalMap::RationalMap(std::vector<RationalComponent> components) : components_(std::move(components)) {
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].denominator.is_zero()) {
      throw AlgebraError(ErrorCode::kZeroDenominator, "component " + std::to_string(i + 1) + " has zero denominator");
    }
  }
}

RationalMap::RationalMap(Generator generator) : generator_(std::move(generator)) {}

std::optional<std::size_t> RationalMap::size() const {
  if (generator_) return std::nullopt;
  return components_.size();
}

RationalComponent RationalMap::component(std::size_t i) const {
  if (!generator_) {
    if (i >= components_.size()) throw AlgebraError(ErrorCode::kInvalidArgument, "rational map has fewer components");
    return components_[i];
  }
  RationalComponent c = generator_(i);
  if (c.denominator.is_zero()) {
    throw AlgebraError(ErrorCode::kZeroDenominator, "component " + std::to_string(i + 1) + " has zero denominator");
  }
  return c;
}

DomainWitness domain_witness(const RationalMap& phi, std::size_t count) {
  std::vector<RationalComponent> comps;
  StdPoly product = StdPoly::constant(GaussianRational(1));
  long bound = 1;
  Var top_w = kWOffset;
  bool any_w = false;
  for (std::size_t i = 0; i < count; ++i) {
    comps.push_back(phi.component(i));
    product *= comps.back().denominator;
    bound += comps.back().denominator.total_degree();
    for (const auto* p : {&comps.back().numerator, &comps.back().denominator}) {
      for (Var v : p->variables()) {
        if (!is_z(v)) {
          top_w = std::max(top_w, v);
          any_w = true;
        }
      }
    }
  }
  DomainWitness out;
  StdPoly rest = product;
  for (Var v : product.variables()) {
    for (long value = 0; value <= bound; ++value) {
      StdPoly q = partial_eval(rest, v, GaussianRational(value));
      if (q.is_zero()) continue;
      rest = std::move(q);
      out.point.set(v, LCNumber(value));
      break;
    }
  }
  PointAssignment full = out.point;
  for (const auto& c : comps) {
    for (Var v : c.numerator.variables()) {
      if (full.find(v) == nullptr) full.set(v, LCNumber(0));
    }
  }
  for (const auto& c : comps) {
    const LCNumber d = poly_eval(c.denominator, full);
    if (d.is_zero()) throw AlgebraError(ErrorCode::kInvalidArgument, "grid search failed");
    out.values.push_back(lc_st(poly_eval(c.numerator, full)) / lc_st(d));
  }
  std::vector<StdPoly> gens;
  const Var first = any_w ? top_w + 1 : kWOffset;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Var wi = first + static_cast<Var>(i);
    gens.push_back(StdPoly::constant(GaussianRational(1)) - StdPoly::variable(wi) * comps[i].denominator);
  }
  out.certificate = is_proper(StdIdeal(std::move(gens)));
  return out;
}

FamilyVariables family_variables(const FamilySpec& spec) {
  const auto& a = spec.parameters;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) throw AlgebraError(ErrorCode::kZeroParameter, "family parameters must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i] == a[j]) {
        throw AlgebraError(ErrorCode::kDuplicateParameter, "parameter " + to_string(a[i]) + " appears twice");
      }
    }
  }
  FamilyVariables vars{z(1), {}, std::nullopt};
  for (std::size_t i = 0; i < a.size(); ++i) vars.parameters.push_back(z(static_cast<std::uint32_t>(i + 2)));
  if (spec.include_extra) vars.extra = z(static_cast<std::uint32_t>(a.size() + 2));
  return vars;
}

std::vector<StdPoly> build_family(const FamilySpec& spec) {
  const FamilyVariables vars = family_variables(spec);
  const StdPoly base = StdPoly::variable(vars.base);
  const StdPoly one = StdPoly::constant(GaussianRational(1));
  std::vector<StdPoly> out;
  for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
    out.push_back(StdPoly::variable(vars.parameters[i]) * (base - StdPoly::constant(spec.parameters[i])) - one);
  }
  if (vars.extra) out.push_back(StdPoly::variable(*vars.extra) * base - one);
  return out;
}

FamilyReport family_checks(const FamilySpec& spec, unsigned power_bound) {
  FamilyReport r;
  r.spec = spec;
  r.vars = family_variables(spec);
  r.generators = build_family(spec);
  const StdIdeal I(r.generators);
  r.proper = is_proper(I);
  bool powers_ok = true;
  for (unsigned k = 1; k <= power_bound; ++k) {
    const bool outside = !ideal_member(StdPoly::variable(r.vars.base, k), I);
    r.powers.emplace_back(k, outside);
    powers_ok = powers_ok && outside;
  }
  if (!spec.include_extra) {
    r.common_zero.set(r.vars.base, LCNumber(0));
    for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
      r.common_zero.set(r.vars.parameters[i], LCNumber(-spec.parameters[i].inverse()));
    }
  } else {
    long c = 1;
    while (std::find(spec.parameters.begin(), spec.parameters.end(), GaussianRational(c)) != spec.parameters.end()) ++c;
    r.common_zero.set(r.vars.base, LCNumber(c));
    for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
      r.common_zero.set(r.vars.parameters[i], LCNumber((GaussianRational(c) - spec.parameters[i]).inverse()));
    }
    r.common_zero.set(*r.vars.extra, LCNumber(GaussianRational(Rational(1, c))));
  }
  r.common_zero_verified = true;
  for (const auto& g : r.generators) r.common_zero_verified = r.common_zero_verified && poly_eval(g, r.common_zero).is_zero();
  r.pass = r.proper && powers_ok && r.common_zero_verified;
  return r;
}

}  // namespace nsag
