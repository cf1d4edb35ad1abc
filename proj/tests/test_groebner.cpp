#include <thread>

#include "doctest.h"
#include "nsag/errors.hpp"
#include "nsag/groebner.hpp"
#include "nsag/polyring.hpp"
#include "support.hpp"

using namespace nsag;
using namespace nsag::testing;

namespace {

StdPoly S(const char* text) { return *as_standard(parse_poly(text)); }
ExtPoly E(const char* text) { return parse_poly(text); }

std::vector<StdPoly> Ss(const char* text) {
  std::vector<StdPoly> out;
  for (const auto& p : parse_poly_list(text)) out.push_back(*as_standard(p));
  return out;
}

template <class K>
std::vector<std::string> fmt(const std::vector<Poly<K>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_poly(p));
  return out;
}

template <class K>
bool same_ideal(const Ideal<K>& a, const Ideal<K>& b) {
  for (const auto& g : a.generators()) {
    if (!ideal_member(g, b)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!ideal_member(g, a)) return false;
  }
  return true;
}

bool power_in(const StdPoly& g, const StdIdeal& I, unsigned bound) {
  StdPoly p = g;
  for (unsigned k = 1; k <= bound; ++k, p *= g) {
    if (ideal_member(p, I)) return true;
  }
  return false;
}

std::vector<StdPoly> random_gens(Rng& rng, std::uint32_t nvars, int count) {
  std::vector<StdPoly> out;
  for (int i = 0; i < count; ++i) out.push_back(random_std_poly(rng, nvars, 2, 3));
  return out;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("reduced bases") {
  CHECK(fmt(buchberger(Ss("z1, z2"), MonomialOrder::grevlex())) == std::vector<std::string>{"z1", "z2"});
  const auto lex = buchberger(Ss("z1 - z2, z2 - 1"), MonomialOrder::lex());
  CHECK(fmt(lex) == std::vector<std::string>{"z1 - 1", "z2 - 1"});
  const StdIdeal given(Ss("z1 - z2, z2 - 1"), MonomialOrder::lex());
  const StdIdeal found(lex, MonomialOrder::lex());
  CHECK(same_ideal(given, found));
  CHECK(buchberger(std::vector<StdPoly>{}, MonomialOrder::grevlex()).empty());
  CHECK(fmt(buchberger(Ss("z1, z1 - 1"), MonomialOrder::grevlex())) == std::vector<std::string>{"1"});
  CHECK(fmt(buchberger(Ss("2*z1 + 4*z2"), MonomialOrder::grevlex())) == std::vector<std::string>{"z1 + 2*z2"});
}

TEST_CASE("extended-domain bases") {
  const auto b = buchberger(std::vector<ExtPoly>{E("eps*z1 - z2"), E("z2^2 - eps")}, MonomialOrder::grevlex());
  const ExtIdeal I(b);
  CHECK(ideal_member(E("eps^2*z1^2 - eps"), I));
  CHECK(ideal_member(E("z1^2 - eps^(-1)"), I));
  CHECK_FALSE(ideal_member(E("z1 - 1"), I));
  CHECK(fmt(buchberger(std::vector<ExtPoly>{E("(1 + eps)*z1"), E("eps*z2")}, MonomialOrder::grevlex())) ==
        std::vector<std::string>{"z1", "z2"});
}

TEST_CASE("normal forms") {
  CHECK(normal_form(S("z1^2"), StdIdeal(Ss("z1"))).is_zero());
  CHECK(normal_form(S("z1 + z2"), StdIdeal(Ss("z1"))) == S("z2"));
  CHECK(normal_form(S("z1*z2 + 3"), StdIdeal()) == S("z1*z2 + 3"));
}

TEST_CASE("membership") {
  CHECK(ideal_member(S("z1*z2"), StdIdeal(Ss("z1"))));
  CHECK_FALSE(ideal_member(S("z2"), StdIdeal(Ss("z1"))));
  CHECK(ideal_member(S("1"), StdIdeal(Ss("z1, z1 - 1"))));
  CHECK(ideal_member(StdPoly(), StdIdeal()));
}

TEST_CASE("radical membership") {
  CHECK(radical_member(S("z1"), StdIdeal(Ss("z1^2"))));
  CHECK(radical_member(S("z1 + z2"), StdIdeal(Ss("z1^2, z2^2"))));
  CHECK(ideal_member(pow(S("z1 + z2"), 3), StdIdeal(Ss("z1^2, z2^2"))));
  CHECK_FALSE(radical_member(S("z1"), StdIdeal(Ss("z2"))));
  CHECK(radical_member(E("z1"), ExtIdeal({E("eps*z1^3")})));
  try {
    radical_member(S("z0"), StdIdeal(Ss("z1")));
    FAIL("z0 accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == ErrorCode::kReservedVariableInUse);
  }
}

TEST_CASE("sum, product and intersection") {
  const StdIdeal a(Ss("z1")), b(Ss("z2"));
  CHECK(same_ideal(ideal_combine(IdealOp::kIntersection, a, b), StdIdeal(Ss("z1*z2"))));
  CHECK(same_ideal(ideal_combine(IdealOp::kSum, a, b), StdIdeal(Ss("z1, z2"))));
  CHECK(same_ideal(ideal_combine(IdealOp::kProduct, a, b), StdIdeal(Ss("z1*z2"))));
  const StdIdeal c(Ss("z1^2, z1*z2")), d(Ss("z2^2"));
  const StdIdeal meet = ideal_combine(IdealOp::kIntersection, c, d);
  CHECK(same_ideal(meet, StdIdeal(Ss("z1^2*z2^2, z1*z2^2"))));
}

TEST_CASE("elimination and contraction") {
  CHECK(eliminate(StdIdeal(Ss("z2 - z1^2")), {z(2)}).basis().empty());
  CHECK(same_ideal(eliminate(StdIdeal(Ss("z1 - 1, z2 - 2")), {z(2)}), StdIdeal(Ss("z1 - 1"))));
  const StdIdeal I(Ss("z1^2 - z2, z3*z1 - 1"));
  CHECK(same_ideal(eliminate(I, {}), I));
  CHECK(contraction(StdIdeal(Ss("z3 - z1")), 1).basis().empty());
  CHECK(same_ideal(contraction(StdIdeal(Ss("z1 - 1, z2 - 2")), 1), StdIdeal(Ss("z1 - 1"))));
  CHECK(same_ideal(contraction(I, 3), I));
  // Substitution oracle: z2 = z1^2 and z1*z3 = 1 give z2*z3^2 = 1.
  CHECK(ideal_member(S("z2*z3^2 - 1"), eliminate(I, {z(1)})));
}

TEST_CASE("properness") {
  CHECK(is_proper(StdIdeal(Ss("z1"))));
  CHECK_FALSE(is_proper(StdIdeal(Ss("z1, z1 - 1"))));
  CHECK(is_proper(StdIdeal()));
  CHECK_FALSE(is_proper(ExtIdeal({E("eps")})));
}

TEST_CASE("syzygies") {
  const auto a = syzygy_basis(Ss("z1, z2"));
  REQUIRE(a.generators.size() == 1);
  CHECK(fmt(a.generators[0]) == std::vector<std::string>{"z2", "-z1"});
  const auto b = syzygy_basis(Ss("z1, z1"));
  REQUIRE(b.generators.size() == 1);
  CHECK(fmt(b.generators[0]) == std::vector<std::string>{"1", "-1"});
  CHECK(syzygy_basis(Ss("z1")).generators.empty());
  // Every bounded-degree solution lies in the module.
  for (const auto& x : bounded_syzygies(Ss("z1, z2"), 2, 3)) CHECK(module_member(x, a.generators));
  try {
    syzygy_basis(std::vector<StdPoly>{});
    FAIL("empty equation accepted");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}

TEST_CASE("module membership and combinations") {
  const std::vector<PolyVector<GaussianRational>> gens{{S("z1"), S("0")}, {S("z2"), S("z1")}};
  CHECK(module_member(PolyVector<GaussianRational>{S("z1*z2 + z1^2"), S("z1^2")}, gens));
  CHECK_FALSE(module_member(PolyVector<GaussianRational>{S("1"), S("0")}, gens));
  const auto combo = express_in(PolyVector<GaussianRational>{S("z1*z2 + z1^2"), S("z1^2")}, gens);
  REQUIRE(combo);
  CHECK(combo->scale == GaussianRational(1));
  CHECK(combo->cofactors[0] * gens[0][0] + combo->cofactors[1] * gens[1][0] == S("z1*z2 + z1^2"));
  CHECK(combo->cofactors[0] * gens[0][1] + combo->cofactors[1] * gens[1][1] == S("z1^2"));
  const auto ker = kernel_generators(std::vector<PolyVector<GaussianRational>>{{S("z1")}, {S("z2")}}, 1);
  REQUIRE(ker.size() == 1);
  CHECK(dot(ker[0], {S("z1"), S("z2")}).is_zero());
}

TEST_CASE("S-polynomials of a reduced basis reduce to zero") {
  Rng rng(31);
  for (int k = 0; k < 60; ++k) {
    const auto gens = random_gens(rng, 3, static_cast<int>(uniform(rng, 1, 3)));
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      const auto G = buchberger(gens, order);
      for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(reduce(s_polynomial(G[i], G[j], order), G, order).is_zero());
      }
      for (const auto& g : gens) CHECK(reduce(g, G, order).is_zero());
    }
  }
  for (int k = 0; k < 30; ++k) {
    std::vector<ExtPoly> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_ext_poly(rng, 2, 2, 3, [](Rng& r) { return random_lc(r, 2); }));
    const auto order = MonomialOrder::grevlex();
    const auto G = buchberger(gens, order);
    for (std::size_t i = 0; i < G.size(); ++i) {
      for (std::size_t j = i + 1; j < G.size(); ++j) CHECK(reduce(s_polynomial(G[i], G[j], order), G, order).is_zero());
    }
    for (const auto& g : gens) CHECK(reduce(g, G, order).is_zero());
  }
}

TEST_CASE("membership agrees with bounded cofactor search") {
  Rng rng(32);
  int positives = 0;
  for (int k = 0; k < 60; ++k) {
    const auto gens = random_gens(rng, 3, static_cast<int>(uniform(rng, 1, 3)));
    const StdIdeal I(gens);
    StdPoly f;
    if (k % 2 == 0) {
      for (const auto& g : gens) f += random_std_poly(rng, 3, 1, 2) * g;
    } else {
      f = random_std_poly(rng, 3, 2, 3);
    }
    const bool lib = ideal_member(f, I);
    const bool brute = brute_force_member(f, gens, 3, 4);
    // A bounded search can only miss members whose cofactors need higher degree.
    if (brute) CHECK(lib);
    if (!lib) CHECK_FALSE(brute);
    if (k % 2 == 0) CHECK(brute);
    positives += lib;
  }
  CHECK(positives >= 30);
}

TEST_CASE("radical membership agrees with power search") {
  Rng rng(33);
  for (int k = 0; k < 40; ++k) {
    auto gens = random_gens(rng, 2, static_cast<int>(uniform(rng, 1, 2)));
    const StdPoly g = random_std_poly(rng, 2, 1, 2);
    if (k % 2 == 0) gens.push_back(pow(g, static_cast<unsigned>(uniform(rng, 2, 3))));
    const StdIdeal I(gens);
    const bool lib = radical_member(g, I);
    const bool brute = power_in(g, I, 6);
    if (brute) CHECK(lib);
    if (!lib) CHECK_FALSE(brute);
  }
}

TEST_CASE("radical of product equals radical of intersection") {
  Rng rng(34);
  for (int k = 0; k < 25; ++k) {
    const StdIdeal I(random_gens(rng, 2, 1)), J(random_gens(rng, 2, 2));
    const StdIdeal prod = ideal_combine(IdealOp::kProduct, I, J);
    const StdIdeal meet = ideal_combine(IdealOp::kIntersection, I, J);
    for (const auto& g : prod.generators()) CHECK(radical_member(g, meet));
    for (const auto& g : meet.generators()) CHECK(radical_member(g, prod));
  }
}

TEST_CASE("syzygy generators solve the equation and span bounded solutions") {
  Rng rng(35);
  for (int k = 0; k < 25; ++k) {
    const auto a = random_gens(rng, 2, static_cast<int>(uniform(rng, 2, 3)));
    const auto basis = syzygy_basis(a);
    for (const auto& x : basis.generators) CHECK(dot(a, x).is_zero());
    for (const auto& x : bounded_syzygies(a, 2, 2)) {
      CHECK(dot(a, x).is_zero());
      CHECK(module_member(x, basis.generators));
    }
  }
}

TEST_CASE("bases are deterministic across runs and threads") {
  Rng rng(36);
  std::vector<std::vector<StdPoly>> inputs;
  for (int k = 0; k < 12; ++k) inputs.push_back(random_gens(rng, 3, 3));
  std::vector<std::vector<std::string>> first, second(inputs.size());
  for (const auto& g : inputs) first.push_back(fmt(buchberger(g, MonomialOrder::grevlex())));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    pool.emplace_back([&, i] { second[i] = fmt(buchberger(inputs[i], MonomialOrder::grevlex())); });
  }
  for (auto& t : pool) t.join();
  CHECK(first == second);
  // A shared ideal computes its basis once.
  const StdIdeal shared(inputs[0]);
  std::vector<std::vector<std::string>> seen(4);
  pool.clear();
  for (std::size_t i = 0; i < seen.size(); ++i) pool.emplace_back([&, i] { seen[i] = fmt(shared.basis()); });
  for (auto& t : pool) t.join();
  for (const auto& s : seen) CHECK(s == first[0]);
}

}
