#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace nsag {

// Variable identifier. z_k has id k; w_k has id kWOffset + k. Smaller ids rank
// higher in every monomial order (z0 > z1 > z2 > ... > w0 > w1 > ...).
using Var = std::uint32_t;

inline constexpr Var kWOffset = 1U << 24;
// z0, the auxiliary variable reserved for the Rabinowitsch construction.
inline constexpr Var kRabinowitschVar = 0;

constexpr Var z(std::uint32_t k) { return k; }
constexpr Var w(std::uint32_t k) { return kWOffset + k; }
constexpr bool is_z(Var v) { return v < kWOffset; }

std::string var_name(Var v);

class Monomial {
 public:
  using Entry = std::pair<Var, std::uint32_t>;

  Monomial() = default;

  static Monomial variable(Var v, std::uint32_t exponent = 1);
  // Sorts by variable, merges repeats and drops zero exponents.
  static Monomial from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return entries_.empty(); }
  std::uint32_t exponent(Var v) const;
  bool contains(Var v) const { return exponent(v) != 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Precondition: divides(b, a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Canonical storage order (not a term order).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Entry> entries_;  // increasing Var, exponents > 0
  std::uint32_t degree_ = 0;
};

bool divides(const Monomial& divisor, const Monomial& m);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

std::string to_string(const Monomial& m);

class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex, kElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex, {}); }
  // Block order: monomials compared first by grevlex on `block`, then by grevlex
  // on the remaining variables. Any monomial involving the block outranks every
  // monomial free of it.
  static MonomialOrder elimination(std::vector<Var> block);

  Kind kind() const { return kind_; }
  const std::vector<Var>& block() const { return block_; }

  // Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::vector<Var> block) : kind_(kind), block_(std::move(block)) {}

  Kind kind_;
  std::vector<Var> block_;  // sorted
};

}  // namespace nsag
