#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "nsag/poly.hpp"

namespace nsag {

// Reduced Groebner basis, sorted descending by leading monomial. Over the
// standard domain every element is monic. Over the extended domain elements are
// primitive (coefficient content removed) with leading coefficient whose lowest
// eps-term is 1; this is the reduced basis over the fraction field up to those
// scalars. Deterministic for a fixed generator order and monomial order.
template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& gens, const MonomialOrder& order);

// Remainder of f under full reduction by `basis`, up to a nonzero scalar over the
// extended domain (exact over the standard domain).
template <class K>
Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& order);

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, const MonomialOrder& order);

template <class K>
class Ideal {
 public:
  Ideal() : Ideal(std::vector<Poly<K>>{}) {}
  explicit Ideal(std::vector<Poly<K>> generators, MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<Poly<K>>& generators() const { return state_->generators; }
  const MonomialOrder& order() const { return state_->order; }
  // Computed on first use and cached; safe to call from several threads.
  const std::vector<Poly<K>>& basis() const;

  std::set<Var> variables() const;

 private:
  struct State {
    State(std::vector<Poly<K>> g, MonomialOrder o) : generators(std::move(g)), order(std::move(o)) {}

    std::vector<Poly<K>> generators;
    MonomialOrder order;
    std::once_flag once;
    std::vector<Poly<K>> basis;
  };
  std::shared_ptr<State> state_;
};

using StdIdeal = Ideal<GaussianRational>;
using ExtIdeal = Ideal<LCNumber>;

template <class K>
Poly<K> normal_form(const Poly<K>& f, const Ideal<K>& I);
template <class K>
bool ideal_member(const Poly<K>& f, const Ideal<K>& I);
template <class K>
bool is_proper(const Ideal<K>& I);

// Some power of g lies in I: tests 1 in I + <1 - z0*g>.
// Throws kReservedVariableInUse if z0 occurs in g or in I.
template <class K>
bool radical_member(const Poly<K>& g, const Ideal<K>& I);

enum class IdealOp { kSum, kProduct, kIntersection };

// Result keeps I's monomial order. Intersection eliminates a fresh variable t
// from t*I + (1-t)*J, with t above every z index in use.
template <class K>
Ideal<K> ideal_combine(IdealOp op, const Ideal<K>& I, const Ideal<K>& J);

// I intersected with the subring free of `drop`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::set<Var>& drop);

// Eliminates every occurring variable outside z1..zn (all w variables included).
template <class K>
Ideal<K> contraction(const Ideal<K>& I, std::uint32_t n);

// A vector in K[z]^r.
template <class K>
using PolyVector = std::vector<Poly<K>>;

template <class K>
struct SyzygyBasis {
  std::vector<Poly<K>> equation;
  std::vector<PolyVector<K>> generators;
};

// Generators of {x : sum a_i x_i = 0}. Throws kInvalidArgument on an empty list.
template <class K>
SyzygyBasis<K> syzygy_basis(const std::vector<Poly<K>>& a,
                            const MonomialOrder& order = MonomialOrder::grevlex());

// Groebner basis of the submodule spanned by `gens` (all of length rank) under the
// position-over-term order.
template <class K>
std::vector<PolyVector<K>> module_basis(const std::vector<PolyVector<K>>& gens, std::size_t rank,
                                        const MonomialOrder& order = MonomialOrder::grevlex());

template <class K>
bool module_member(const PolyVector<K>& v, const std::vector<PolyVector<K>>& gens,
                   const MonomialOrder& order = MonomialOrder::grevlex());

// Generators of the kernel of the matrix whose columns are given (each of length
// rows), as vectors of length columns.size().
template <class K>
std::vector<PolyVector<K>> kernel_generators(const std::vector<PolyVector<K>>& columns, std::size_t rows,
                                             const MonomialOrder& order = MonomialOrder::grevlex());

// scale * v = sum_j cofactors[j] * gens[j]. The scale is 1 whenever the
// cofactors can be divided by it exactly.
template <class K>
struct Combination {
  K scale;
  std::vector<Poly<K>> cofactors;
};

template <class K>
std::optional<Combination<K>> express_in(const PolyVector<K>& v, const std::vector<PolyVector<K>>& gens,
                                         const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace nsag
