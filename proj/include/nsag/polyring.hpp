#pragma once

#include <map>
#include <string>
#include <string_view>

#include "nsag/poly.hpp"

namespace nsag {

// Polynomial text grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | base ('^' exponent)?
//   base     := rational | 'i' | 'eps' | var | '(' expr ')'
//   var      := ('z'|'w') digits
//   rational := digits ('/' digits)?
//   exponent := digits | '(' '-'? rational ')'     (rational exponents only on eps)
// Throws ParseError with the offending position.
ExtPoly parse_poly(std::string_view text);
// A constant expression in the same grammar.
LCNumber parse_number(std::string_view text);
// Comma- or semicolon-separated list; an empty string is the empty list.
std::vector<ExtPoly> parse_poly_list(std::string_view text);

// Terms in descending grevlex order; parse_poly(format_poly(f)) == f.
std::string format_poly(const ExtPoly& f);
std::string format_poly(const StdPoly& f);
std::string format_number(const LCNumber& x);
std::string format_number(const GaussianRational& x);

// Finitely supported assignment of extended values to variables.
class PointAssignment {
 public:
  PointAssignment() = default;

  void set(Var v, LCNumber value) { values_[v] = std::move(value); }
  const LCNumber* find(Var v) const {
    auto it = values_.find(v);
    return it == values_.end() ? nullptr : &it->second;
  }
  const std::map<Var, LCNumber>& values() const { return values_; }
  bool empty() const { return values_.empty(); }
  std::size_t size() const { return values_.size(); }
  // Every value is a plain element of Q(i).
  bool is_standard() const;

  friend bool operator==(const PointAssignment&, const PointAssignment&) = default;

 private:
  std::map<Var, LCNumber> values_;
};

// "z1=0, z2=1+eps".
PointAssignment parse_point(std::string_view text);
std::string format_point(const PointAssignment& p);

// Exact value. Throws kUnassignedVariable naming the first missing variable.
LCNumber poly_eval(const ExtPoly& f, const PointAssignment& p);
LCNumber poly_eval(const StdPoly& f, const PointAssignment& p);

// Coefficient-wise standard part. Throws kUnlimitedCoefficient.
StdPoly poly_shadow(const ExtPoly& f);

// f divided by the leading eps-term of a coefficient that is maximal under
// lc_abs_cmp (ties: the coefficient of the grevlex-largest monomial). The result
// has limited coefficients and a nonzero shadow. Throws kZeroPolynomial.
ExtPoly max_abs_normalize(const ExtPoly& f);

struct InfApSplit {
  ExtPoly infinitesimal;
  ExtPoly appreciable;
};
// Throws kUnlimitedCoefficient.
InfApSplit split_inf_ap(const ExtPoly& f);

// Variable-wise affine substitution v -> image(v), each image of degree <= 1.
class AffineSubstitution {
 public:
  AffineSubstitution() = default;

  static AffineSubstitution identity(const std::set<Var>& vars);
  // v -> v + shift(v) for each listed variable.
  static AffineSubstitution translation(const std::map<Var, LCNumber>& shift);

  // Throws kInvalidArgument if image has degree > 1.
  void set(Var source, ExtPoly image);
  const std::map<Var, ExtPoly>& images() const { return images_; }

  // The linear part, as a square matrix over the image variables, has nonzero
  // determinant.
  bool is_invertible() const;

 private:
  std::map<Var, ExtPoly> images_;
};

// Throws kUnassignedVariable when f uses a variable that s does not map.
ExtPoly apply_substitution(const ExtPoly& f, const AffineSubstitution& s);

// Substitution of values into some variables only; the rest stay symbolic.
ExtPoly partial_eval(const ExtPoly& f, const PointAssignment& p);
StdPoly partial_eval(const StdPoly& f, Var v, const GaussianRational& value);

}  // namespace nsag
