#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsag/groebner.hpp"
#include "nsag/polyring.hpp"

namespace nsag {

// Coordinate-wise standard part. Throws kUnlimitedValue naming the coordinate.
PointAssignment point_shadow(const PointAssignment& p);

// Every coordinate of p - a is infinitesimal. Throws kSupportMismatch unless p
// and a assign the same variables.
bool halo_member(const PointAssignment& p, const PointAssignment& a);

// X = V(generators) inside the affine space on `ambient`. The generators are
// asserted by the caller to generate a radical ideal.
class VarietyPresentation {
 public:
  VarietyPresentation(std::vector<Var> ambient, std::vector<StdPoly> generators);

  const std::vector<Var>& ambient() const { return ambient_; }
  const std::vector<StdPoly>& generators() const { return ideal_.generators(); }
  const StdIdeal& ideal() const { return ideal_; }
  const ExtIdeal& extended_ideal() const { return extended_; }

  // Partial check of the radical assertion: for every ambient variable and for
  // the squarefree part of every generator that involves a single variable,
  // membership in the radical implies membership in the ideal.
  bool radical_spot_check() const;

 private:
  std::vector<Var> ambient_;
  StdIdeal ideal_;
  ExtIdeal extended_;
};

struct VarietyReduction {
  bool all_of_x = false;
  // Meaningful when !all_of_x: V(g) = V(f) on X and the shadow of g is not in
  // the radical of I(X).
  ExtPoly g;
  // Normalization passes; at most the number of monomials of f.
  std::size_t iterations = 0;
  // <I(X), f> == <I(X), g> over the extended domain.
  bool same_ideal = false;
};

// Throws kUnlimitedCoefficient. Throws kInvalidArgument if a shadow lies in the
// radical of I(X) but not in I(X), which means the presentation is not radical.
VarietyReduction reduce_on_variety(const ExtPoly& f, const VarietyPresentation& X);

// Root of f near a: returns xi with st(xi) = a and valuation(f(xi)) > t.order.
// f must involve exactly one variable. Throws kNotAShadowRoot when a is not a
// root of the shadow of max_abs_normalize(f), kNonConstructibleRoot when a
// Newton-polygon step needs a root outside Q(i).
PointAssignment newton_puiseux_lift(const ExtPoly& f, const GaussianRational& a, const TruncationOrder& t);

// Point in the halo of a at which f does not vanish. Throws kEmptyOpen for f = 0
// and kUnassignedVariable when a misses a variable of f.
PointAssignment open_shadow_witness(const ExtPoly& f, const PointAssignment& a, std::uint32_t seed = 0);

struct LiftWitness {
  GaussianRational point;
  LCNumber lift;
  Valuation residual;
  LCNumber closest_root;
  Valuation distance;
  bool in_halo = false;
  bool residual_ok = false;
  bool closest_in_halo = false;
};

struct ShadowClosureReport {
  std::vector<LCNumber> roots;
  ExtPoly f;
  // Shadow of the reduced polynomial.
  StdPoly reduced_shadow;
  std::vector<GaussianRational> lhs;
  std::vector<GaussianRational> rhs;
  // The reduced shadow has no roots besides rhs.
  bool rhs_complete = false;
  std::vector<LiftWitness> witnesses;
  bool pass = false;
};

// Builds f = prod (z1 - root) and compares the shadows of its roots with the
// zero set of its reduced shadow. Throws kInvalidArgument on an empty list.
ShadowClosureReport verify_shadow_closure(const std::vector<LCNumber>& roots, const TruncationOrder& t);

}  // namespace nsag
