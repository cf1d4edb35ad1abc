#include "nsag/groebner.hpp"

#include <algorithm>
#include <type_traits>

#include "nsag/errors.hpp"

namespace nsag {

namespace {

// Module vectors are flat term lists over (component, monomial), kept sorted
// descending in the position-over-term order: a lower component index ranks
// higher, then the monomial order decides. Ideals are the rank-1 case.
template <class K>
struct MTerm {
  std::uint32_t comp;
  Monomial mono;
  K coeff;
};

template <class K>
using MVec = std::vector<MTerm<K>>;

class ModOrder {
 public:
  explicit ModOrder(const MonomialOrder& mono) : mono_(mono) {}

  int compare(std::uint32_t ca, const Monomial& a, std::uint32_t cb, const Monomial& b) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono_.compare(a, b);
  }
  template <class K>
  int compare(const MTerm<K>& a, const MTerm<K>& b) const {
    return compare(a.comp, a.mono, b.comp, b.mono);
  }

 private:
  const MonomialOrder& mono_;
};

template <class K>
struct Ops;

template <>
struct Ops<GaussianRational> {
  using K = GaussianRational;
  static bool is_unit(const K& c) { return !c.is_zero(); }
  static K unit_inverse(const K& c) { return c.inverse(); }
  static K gcd(const K&, const K&) { return K(1); }
  static K divide(const K& a, const K& b) { return a / b; }
  static std::optional<K> try_divide(const K& a, const K& b) { return a / b; }
};

template <>
struct Ops<LCNumber> {
  using K = LCNumber;
  static bool is_unit(const K& c) { return c.is_unit(); }
  static K unit_inverse(const K& c) {
    const LCTerm& t = c.leading_term();
    return LCNumber::monomial(t.coeff.inverse(), Rational(-t.exponent));
  }
  static K gcd(const K& a, const K& b) { return lc_gcd(a, b); }
  static K divide(const K& a, const K& b) { return *lc_divide_exact(a, b); }
  static std::optional<K> try_divide(const K& a, const K& b) { return lc_divide_exact(a, b); }
};

template <class K>
void scale_in_place(MVec<K>& v, const K& c) {
  if (c == K(1)) return;
  for (auto& t : v) t.coeff = c * t.coeff;
}

// Makes the vector canonical up to units of the coefficient ring: monic over
// Q(i); content-free with leading coefficient starting 1*eps^0 over the
// finite-sum ring.
template <class K>
void normalize(MVec<K>& v) {
  if (v.empty()) return;
  if constexpr (std::is_same_v<K, LCNumber>) {
    LCNumber g = v.front().coeff;
    for (std::size_t k = 1; k < v.size() && !g.is_unit(); ++k) g = lc_gcd(g, v[k].coeff);
    if (!g.is_unit()) {
      for (auto& t : v) t.coeff = *lc_divide_exact(t.coeff, g);
    }
  }
  const K lead = v.front().coeff;
  if constexpr (std::is_same_v<K, LCNumber>) {
    const LCTerm& lt = lead.leading_term();
    scale_in_place(v, Ops<K>::unit_inverse(LCNumber::monomial(lt.coeff, lt.exponent)));
  } else {
    scale_in_place(v, lead.inverse());
  }
}

// a*(hm*h[from..]) - b*(gm*g). Multiplying by a monomial preserves the order,
// so this is a single merge.
template <class K>
MVec<K> combine(const K& a, const MVec<K>& h, std::size_t from, const Monomial& hm, const K& b,
                const Monomial& gm, const MVec<K>& g, const ModOrder& ord) {
  MVec<K> out;
  out.reserve(h.size() - from + g.size());
  const bool a_one = a == K(1);
  const bool hm_one = hm.is_one();
  const bool gm_one = gm.is_one();
  std::size_t i = from;
  std::size_t j = 0;
  Monomial hi;
  Monomial gj;
  auto h_mono = [&](std::size_t k) { return hm_one ? h[k].mono : h[k].mono * hm; };
  auto g_mono = [&](std::size_t k) { return gm_one ? g[k].mono : g[k].mono * gm; };
  if (i < h.size()) hi = h_mono(i);
  if (j < g.size()) gj = g_mono(j);
  while (i < h.size() || j < g.size()) {
    int c;
    if (i == h.size()) {
      c = -1;
    } else if (j == g.size()) {
      c = 1;
    } else {
      c = ord.compare(h[i].comp, hi, g[j].comp, gj);
    }
    if (c > 0) {
      out.push_back({h[i].comp, std::move(hi), a_one ? h[i].coeff : a * h[i].coeff});
      if (++i < h.size()) hi = h_mono(i);
    } else if (c < 0) {
      out.push_back({g[j].comp, std::move(gj), -(b * g[j].coeff)});
      if (++j < g.size()) gj = g_mono(j);
    } else {
      K s = (a_one ? h[i].coeff : a * h[i].coeff) - b * g[j].coeff;
      if (!s.is_zero()) out.push_back({h[i].comp, std::move(hi), std::move(s)});
      if (++i < h.size()) hi = h_mono(i);
      if (++j < g.size()) gj = g_mono(j);
    }
  }
  return out;
}

template <class K>
struct Reduced {
  K scale;
  MVec<K> rem;
};

template <class K>
const MVec<K>* find_reducer(const MTerm<K>& lt, const std::vector<MVec<K>>& basis, const MVec<K>* skip) {
  for (const auto& g : basis) {
    if (&g == skip || g.empty()) continue;
    if (g.front().comp == lt.comp && divides(g.front().mono, lt.mono)) return &g;
  }
  return nullptr;
}

// Full reduction: scale*h = sum q_k*basis_k + rem, no term of rem divisible by
// a leading term of the basis.
template <class K>
Reduced<K> reduce_full(MVec<K> h, const std::vector<MVec<K>>& basis, const ModOrder& ord,
                       const MVec<K>* skip = nullptr) {
  K scale(1);
  MVec<K> rem;
  std::size_t pos = 0;
  const Monomial one;
  while (pos < h.size()) {
    const MTerm<K>& lt = h[pos];
    const MVec<K>* g = find_reducer(lt, basis, skip);
    if (g == nullptr) {
      rem.push_back(lt);
      ++pos;
      continue;
    }
    const Monomial m = lt.mono / g->front().mono;
    const K& l = g->front().coeff;
    if (Ops<K>::is_unit(l)) {
      h = combine(K(1), h, pos, one, lt.coeff * Ops<K>::unit_inverse(l), m, *g, ord);
    } else {
      const K d = Ops<K>::gcd(lt.coeff, l);
      const K a = Ops<K>::divide(l, d);
      const K b = Ops<K>::divide(lt.coeff, d);
      h = combine(a, h, pos, one, b, m, *g, ord);
      scale_in_place(rem, a);
      scale = scale * a;
    }
    pos = 0;
  }
  return {std::move(scale), std::move(rem)};
}

template <class K>
MVec<K> spoly(const MVec<K>& f, const MVec<K>& g, const ModOrder& ord) {
  const Monomial L = lcm(f.front().mono, g.front().mono);
  const Monomial mf = L / f.front().mono;
  const Monomial mg = L / g.front().mono;
  const K& cf = f.front().coeff;
  const K& cg = g.front().coeff;
  if (Ops<K>::is_unit(cf) && Ops<K>::is_unit(cg)) {
    return combine(Ops<K>::unit_inverse(cf), f, 0, mf, Ops<K>::unit_inverse(cg), mg, g, ord);
  }
  const K d = Ops<K>::gcd(cf, cg);
  return combine(Ops<K>::divide(cg, d), f, 0, mf, Ops<K>::divide(cf, d), mg, g, ord);
}

struct Pair {
  std::size_t i;
  std::size_t j;
  std::uint32_t comp;
  Monomial lcm;
};

template <class K>
std::vector<MVec<K>> groebner_core(const std::vector<MVec<K>>& input, const MonomialOrder& mono,
                                   bool ideal_mode) {
  const ModOrder ord(mono);
  std::vector<MVec<K>> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit_found = false;

  auto add = [&](MVec<K> f) {
    normalize(f);
    if (ideal_mode && f.front().mono.is_one()) unit_found = true;
    const std::size_t n = G.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (G[k].front().comp != f.front().comp) continue;
      pairs.push_back({k, n, f.front().comp, lcm(G[k].front().mono, f.front().mono)});
      pending.insert({k, n});
    }
    G.push_back(std::move(f));
  };

  for (const auto& f : input) {
    if (!f.empty()) add(f);
    if (unit_found) break;
  }

  while (!pairs.empty() && !unit_found) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& p = pairs[k];
      const Pair& q = pairs[best];
      if (p.lcm.degree() != q.lcm.degree()) {
        if (p.lcm.degree() < q.lcm.degree()) best = k;
        continue;
      }
      const int c = ord.compare(p.comp, p.lcm, q.comp, q.lcm);
      if (c < 0 || (c == 0 && std::pair(p.i, p.j) < std::pair(q.i, q.j))) best = k;
    }
    const Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    pending.erase({p.i, p.j});

    const MVec<K>& fi = G[p.i];
    const MVec<K>& fj = G[p.j];
    if (ideal_mode && coprime(fi.front().mono, fj.front().mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j || G[k].front().comp != p.comp) continue;
      if (!divides(G[k].front().mono, p.lcm)) continue;
      if (pending.count({std::min(k, p.i), std::max(k, p.i)}) != 0) continue;
      if (pending.count({std::min(k, p.j), std::max(k, p.j)}) != 0) continue;
      chain = true;
    }
    if (chain) continue;

    Reduced<K> r = reduce_full(spoly(fi, fj, ord), G, ord);
    if (!r.rem.empty()) add(std::move(r.rem));
  }

  if (unit_found) {
    MVec<K> one{{0, Monomial(), K(1)}};
    return {one};
  }

  // Minimize: drop elements whose leading term is divisible by another's.
  std::vector<MVec<K>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j || G[j].front().comp != G[i].front().comp) continue;
      if (!divides(G[j].front().mono, G[i].front().mono)) continue;
      redundant = !(G[j].front().mono == G[i].front().mono) || j < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Interreduce tails.
  for (auto& g : minimal) {
    Reduced<K> r = reduce_full(g, minimal, ord, &g);
    normalize(r.rem);
    g = std::move(r.rem);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const MVec<K>& a, const MVec<K>& b) { return ord.compare(a.front(), b.front()) > 0; });
  return minimal;
}

template <class K>
MVec<K> to_mvec(const Poly<K>& f, const MonomialOrder& order) {
  MVec<K> out;
  out.reserve(f.size());
  for (auto& [m, c] : f.sorted_terms(order)) out.push_back({0, m, c});
  return out;
}

template <class K>
Poly<K> to_poly(const MVec<K>& v) {
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.emplace_back(t.mono, t.coeff);
  return Poly<K>::from_terms(std::move(terms));
}

template <class K>
MVec<K> vector_to_mvec(const PolyVector<K>& v, std::uint32_t offset, const ModOrder& ord) {
  MVec<K> out;
  for (std::size_t c = 0; c < v.size(); ++c) {
    for (const auto& [m, coeff] : v[c].terms()) out.push_back({static_cast<std::uint32_t>(c) + offset, m, coeff});
  }
  std::sort(out.begin(), out.end(), [&](const MTerm<K>& a, const MTerm<K>& b) { return ord.compare(a, b) > 0; });
  return out;
}

// Components [from, from + rank) as a vector of length rank.
template <class K>
PolyVector<K> mvec_to_vector(const MVec<K>& v, std::size_t from, std::size_t rank) {
  std::vector<std::vector<typename Poly<K>::Term>> buckets(rank);
  for (const auto& t : v) {
    if (t.comp >= from && t.comp < from + rank) buckets[t.comp - from].emplace_back(t.mono, t.coeff);
  }
  PolyVector<K> out;
  out.reserve(rank);
  for (auto& b : buckets) out.push_back(Poly<K>::from_terms(std::move(b)));
  return out;
}

template <class K>
std::vector<MVec<K>> augmented_basis(const std::vector<PolyVector<K>>& gens, std::size_t rows,
                                     const MonomialOrder& order) {
  const ModOrder ord(order);
  std::vector<MVec<K>> input;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (gens[j].size() != rows) throw AlgebraError(ErrorCode::kInvalidArgument, "vector length mismatch");
    MVec<K> v = vector_to_mvec(gens[j], 0, ord);
    v.push_back({static_cast<std::uint32_t>(rows + j), Monomial(), K(1)});
    input.push_back(std::move(v));
  }
  return groebner_core(input, order, false);
}

template <class K>
void check_rank(const std::vector<PolyVector<K>>& gens, std::size_t rank) {
  for (const auto& g : gens) {
    if (g.size() != rank) throw AlgebraError(ErrorCode::kInvalidArgument, "vector length mismatch");
  }
}

template <class K>
bool uses_var(const Poly<K>& f, Var v) {
  for (const auto& t : f.terms()) {
    if (t.first.contains(v)) return true;
  }
  return false;
}

}  // namespace

template <class K>
std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>& gens, const MonomialOrder& order) {
  std::vector<MVec<K>> input;
  input.reserve(gens.size());
  for (const auto& g : gens) input.push_back(to_mvec(g, order));
  std::vector<Poly<K>> out;
  for (const auto& v : groebner_core(input, order, true)) out.push_back(to_poly(v));
  return out;
}

template <class K>
Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& basis, const MonomialOrder& order) {
  const ModOrder ord(order);
  std::vector<MVec<K>> B;
  for (const auto& g : basis) {
    if (!g.is_zero()) B.push_back(to_mvec(g, order));
  }
  Reduced<K> r = reduce_full(to_mvec(f, order), B, ord);
  if (!(r.scale == K(1))) {
    MVec<K> divided = r.rem;
    bool exact = true;
    for (auto& t : divided) {
      auto q = Ops<K>::try_divide(t.coeff, r.scale);
      if (!q) {
        exact = false;
        break;
      }
      t.coeff = std::move(*q);
    }
    if (exact) return to_poly(divided);
  }
  return to_poly(r.rem);
}

template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) return {};
  return to_poly(spoly(to_mvec(f, order), to_mvec(g, order), ModOrder(order)));
}

template <class K>
Ideal<K>::Ideal(std::vector<Poly<K>> generators, MonomialOrder order)
    : state_(std::make_shared<State>(std::move(generators), std::move(order))) {}

template <class K>
const std::vector<Poly<K>>& Ideal<K>::basis() const {
  State& s = *state_;
  std::call_once(s.once, [&s] { s.basis = buchberger(s.generators, s.order); });
  return s.basis;
}

template <class K>
std::set<Var> Ideal<K>::variables() const {
  std::set<Var> vars;
  for (const auto& g : generators()) {
    for (Var v : g.variables()) vars.insert(v);
  }
  return vars;
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const Ideal<K>& I) {
  return reduce(f, I.basis(), I.order());
}

template <class K>
bool ideal_member(const Poly<K>& f, const Ideal<K>& I) {
  return normal_form(f, I).is_zero();
}

template <class K>
bool is_proper(const Ideal<K>& I) {
  for (const auto& g : I.basis()) {
    if (g.is_constant()) return false;
  }
  return true;
}

template <class K>
bool radical_member(const Poly<K>& g, const Ideal<K>& I) {
  bool reserved = uses_var(g, kRabinowitschVar);
  for (const auto& f : I.generators()) reserved = reserved || uses_var(f, kRabinowitschVar);
  if (reserved) {
    throw AlgebraError(ErrorCode::kReservedVariableInUse, "z0 is reserved for the radical membership test");
  }
  std::vector<Poly<K>> gens = I.generators();
  gens.push_back(Poly<K>::constant(K(1)) - Poly<K>::variable(kRabinowitschVar) * g);
  return !is_proper(Ideal<K>(std::move(gens), I.order()));
}

template <class K>
Ideal<K> ideal_combine(IdealOp op, const Ideal<K>& I, const Ideal<K>& J) {
  std::vector<Poly<K>> gens;
  switch (op) {
    case IdealOp::kSum:
      gens = I.generators();
      gens.insert(gens.end(), J.generators().begin(), J.generators().end());
      return Ideal<K>(std::move(gens), I.order());
    case IdealOp::kProduct:
      for (const auto& f : I.generators()) {
        for (const auto& g : J.generators()) {
          Poly<K> p = f * g;
          if (!p.is_zero()) gens.push_back(std::move(p));
        }
      }
      return Ideal<K>(std::move(gens), I.order());
    case IdealOp::kIntersection: {
      Var top = 0;
      for (Var v : I.variables()) {
        if (is_z(v)) top = std::max(top, v);
      }
      for (Var v : J.variables()) {
        if (is_z(v)) top = std::max(top, v);
      }
      const Var t = z(top + 1);
      const Poly<K> tp = Poly<K>::variable(t);
      const Poly<K> one_minus_t = Poly<K>::constant(K(1)) - tp;
      for (const auto& f : I.generators()) gens.push_back(tp * f);
      for (const auto& g : J.generators()) gens.push_back(one_minus_t * g);
      return eliminate(Ideal<K>(std::move(gens), I.order()), {t});
    }
  }
  return I;
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::set<Var>& drop) {
  bool touches = false;
  for (Var v : I.variables()) touches = touches || drop.count(v) != 0;
  if (!touches) return I;
  const MonomialOrder order = MonomialOrder::elimination(std::vector<Var>(drop.begin(), drop.end()));
  std::vector<Poly<K>> kept;
  for (auto& g : buchberger(I.generators(), order)) {
    bool free = true;
    for (Var v : g.variables()) free = free && drop.count(v) == 0;
    if (free) kept.push_back(std::move(g));
  }
  return Ideal<K>(std::move(kept), I.order());
}

template <class K>
Ideal<K> contraction(const Ideal<K>& I, std::uint32_t n) {
  std::set<Var> drop;
  for (Var v : I.variables()) {
    if (!is_z(v) || v > n) drop.insert(v);
  }
  return eliminate(I, drop);
}

template <class K>
SyzygyBasis<K> syzygy_basis(const std::vector<Poly<K>>& a, const MonomialOrder& order) {
  if (a.empty()) throw AlgebraError(ErrorCode::kInvalidArgument, "syzygy of an empty equation");
  std::vector<PolyVector<K>> columns;
  for (const auto& f : a) columns.push_back({f});
  return {a, kernel_generators(columns, 1, order)};
}

template <class K>
std::vector<PolyVector<K>> module_basis(const std::vector<PolyVector<K>>& gens, std::size_t rank,
                                        const MonomialOrder& order) {
  check_rank(gens, rank);
  const ModOrder ord(order);
  std::vector<MVec<K>> input;
  for (const auto& g : gens) input.push_back(vector_to_mvec(g, 0, ord));
  std::vector<PolyVector<K>> out;
  for (const auto& v : groebner_core(input, order, false)) out.push_back(mvec_to_vector(v, 0, rank));
  return out;
}

template <class K>
bool module_member(const PolyVector<K>& v, const std::vector<PolyVector<K>>& gens, const MonomialOrder& order) {
  check_rank(gens, v.size());
  const ModOrder ord(order);
  std::vector<MVec<K>> input;
  for (const auto& g : gens) input.push_back(vector_to_mvec(g, 0, ord));
  const std::vector<MVec<K>> basis = groebner_core(input, order, false);
  return reduce_full(vector_to_mvec(v, 0, ord), basis, ord).rem.empty();
}

template <class K>
std::vector<PolyVector<K>> kernel_generators(const std::vector<PolyVector<K>>& columns, std::size_t rows,
                                             const MonomialOrder& order) {
  std::vector<PolyVector<K>> out;
  for (const auto& v : augmented_basis(columns, rows, order)) {
    if (v.front().comp >= rows) out.push_back(mvec_to_vector(v, rows, columns.size()));
  }
  return out;
}

template <class K>
std::optional<Combination<K>> express_in(const PolyVector<K>& v, const std::vector<PolyVector<K>>& gens,
                                         const MonomialOrder& order) {
  const std::size_t rows = v.size();
  const ModOrder ord(order);
  const std::vector<MVec<K>> basis = augmented_basis(gens, rows, order);
  Reduced<K> r = reduce_full(vector_to_mvec(v, 0, ord), basis, ord);
  for (const auto& t : r.rem) {
    if (t.comp < rows) return std::nullopt;
  }
  Combination<K> out{r.scale, mvec_to_vector(r.rem, rows, gens.size())};
  for (auto& c : out.cofactors) c = -c;
  if (!(out.scale == K(1))) {
    std::vector<Poly<K>> divided;
    for (const auto& c : out.cofactors) {
      std::vector<typename Poly<K>::Term> terms;
      for (const auto& [m, coeff] : c.terms()) {
        auto q = Ops<K>::try_divide(coeff, out.scale);
        if (!q) return out;
        terms.emplace_back(m, std::move(*q));
      }
      divided.push_back(Poly<K>::from_terms(std::move(terms)));
    }
    out = {K(1), std::move(divided)};
  }
  return out;
}

#define NSAG_INSTANTIATE(K)                                                                                 \
  template std::vector<Poly<K>> buchberger(const std::vector<Poly<K>>&, const MonomialOrder&);             \
  template Poly<K> reduce(const Poly<K>&, const std::vector<Poly<K>>&, const MonomialOrder&);              \
  template Poly<K> s_polynomial(const Poly<K>&, const Poly<K>&, const MonomialOrder&);                     \
  template class Ideal<K>;                                                                                  \
  template Poly<K> normal_form(const Poly<K>&, const Ideal<K>&);                                           \
  template bool ideal_member(const Poly<K>&, const Ideal<K>&);                                             \
  template bool is_proper(const Ideal<K>&);                                                                 \
  template bool radical_member(const Poly<K>&, const Ideal<K>&);                                           \
  template Ideal<K> ideal_combine(IdealOp, const Ideal<K>&, const Ideal<K>&);                              \
  template Ideal<K> eliminate(const Ideal<K>&, const std::set<Var>&);                                      \
  template Ideal<K> contraction(const Ideal<K>&, std::uint32_t);                                           \
  template SyzygyBasis<K> syzygy_basis(const std::vector<Poly<K>>&, const MonomialOrder&);                 \
  template std::vector<PolyVector<K>> module_basis(const std::vector<PolyVector<K>>&, std::size_t,         \
                                                   const MonomialOrder&);                                   \
  template bool module_member(const PolyVector<K>&, const std::vector<PolyVector<K>>&, const MonomialOrder&); \
  template std::vector<PolyVector<K>> kernel_generators(const std::vector<PolyVector<K>>&, std::size_t,    \
                                                        const MonomialOrder&);                              \
  template std::optional<Combination<K>> express_in(const PolyVector<K>&, const std::vector<PolyVector<K>>&, \
                                                    const MonomialOrder&);

NSAG_INSTANTIATE(GaussianRational)
NSAG_INSTANTIATE(LCNumber)

#undef NSAG_INSTANTIATE

}  // namespace nsag
