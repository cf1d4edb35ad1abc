#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsag/groebner.hpp"
#include "nsag/polyring.hpp"

namespace nsag {

struct PointIdealResult {
  // Coordinates of the constrained variables; every other variable is free.
  std::optional<PointAssignment> point;
  // Empty on success, otherwise "improper" or "not a point ideal".
  std::string reason;
};

// Recognizes <z_i - a_i : i in F> from the reduced lex basis.
PointIdealResult is_point_ideal(const StdIdeal& I);

// g in the radical of J, computed in the finite polynomial ring on the variables
// that occur. Throws kReservedVariableInUse.
bool radical_nullstellensatz(const StdPoly& g, const StdIdeal& J);

struct VarietyIdentityReport {
  // Generators of I*J in the radical of I cap J, and the converse.
  bool product_in_intersection = false;
  bool intersection_in_product = false;
  // I cap J lies in I and in J.
  bool intersection_in_each = false;
  // I and J lie in I + J.
  bool each_in_sum = false;
  bool pass = false;
};

VarietyIdentityReport variety_identity_check(const StdIdeal& I, const StdIdeal& J);

struct RationalComponent {
  StdPoly numerator;
  StdPoly denominator;
};

// phi = (g_1/f_1, g_2/f_2, ...), finite or produced on demand.
class RationalMap {
 public:
  using Generator = std::function<RationalComponent(std::size_t)>;

  // Throws kZeroDenominator.
  explicit RationalMap(std::vector<RationalComponent> components);
  explicit RationalMap(Generator generator);

  std::optional<std::size_t> size() const;
  // Throws kInvalidArgument past the end of a finite map, kZeroDenominator for a
  // zero denominator.
  RationalComponent component(std::size_t i) const;

 private:
  std::vector<RationalComponent> components_;
  Generator generator_;
};

struct DomainWitness {
  PointAssignment point;
  // phi_i at the point, i < count.
  std::vector<GaussianRational> values;
  // 1 is not in <1 - w_i f_i : i < count>.
  bool certificate = false;
};

// Standard point where the first `count` denominators are all nonzero.
DomainWitness domain_witness(const RationalMap& phi, std::size_t count);

struct FamilySpec {
  std::vector<GaussianRational> parameters;
  bool include_extra = false;
};

// Variable map: the distinguished variable is z1, parameter k (0-based) gets
// z_{k+2}, the extra variable comes last.
struct FamilyVariables {
  Var base;
  std::vector<Var> parameters;
  std::optional<Var> extra;
};

// Throws kZeroParameter, kDuplicateParameter.
FamilyVariables family_variables(const FamilySpec& spec);

// h_a = z_a*(z_base - a) - 1 per parameter, plus z_extra*z_base - 1.
std::vector<StdPoly> build_family(const FamilySpec& spec);

struct FamilyReport {
  FamilySpec spec;
  FamilyVariables vars;
  std::vector<StdPoly> generators;
  bool proper = false;
  // (k, z_base^k not in the ideal) for k = 1..power_bound.
  std::vector<std::pair<unsigned, bool>> powers;
  PointAssignment common_zero;
  bool common_zero_verified = false;
  bool pass = false;
};

FamilyReport family_checks(const FamilySpec& spec, unsigned power_bound);

}  // namespace nsag
