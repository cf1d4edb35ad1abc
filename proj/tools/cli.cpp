#include "cli.hpp"

#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "nsag/errors.hpp"
#include "nsag/groebner.hpp"
#include "nsag/infinidim.hpp"
#include "nsag/polyring.hpp"
#include "nsag/shadow.hpp"
#include "nsag/starmod.hpp"

namespace nsag::cli {

namespace {

using Json = nlohmann::ordered_json;

struct SessionConfig {
  std::string truncation = "16";
  std::string order = "grevlex";
  std::uint32_t seed = 0;
  unsigned power_bound = 6;
};

struct Session {
  TruncationOrder trunc;
  MonomialOrder order = MonomialOrder::grevlex();
  std::uint32_t seed = 0;
  unsigned power_bound = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json config_json(const SessionConfig& c) {
  Json j;
  j["truncation"] = c.truncation;
  j["order"] = c.order;
  j["seed"] = c.seed;
  j["power_bound"] = c.power_bound;
  return j;
}

std::string compact(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c != '\n') out += c;
  }
  return out;
}

Json strings(const std::vector<ExtPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format_poly(p));
  return a;
}

Json strings(const std::vector<StdPoly>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(format_poly(p));
  return a;
}

template <class K>
Json vectors(const std::vector<PolyVector<K>>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(strings(v));
  return a;
}

Json point_json(const PointAssignment& p) {
  Json j = Json::object();
  for (const auto& [v, x] : p.values()) j[var_name(v)] = to_string(x);
  return j;
}

StdPoly standard(const ExtPoly& p) {
  auto s = as_standard(p);
  if (!s) throw AlgebraError(ErrorCode::kInvalidArgument, "expected standard coefficients in " + format_poly(p));
  return *s;
}

std::vector<StdPoly> standard(const std::vector<ExtPoly>& ps) {
  std::vector<StdPoly> out;
  for (const auto& p : ps) out.push_back(standard(p));
  return out;
}

bool all_standard(const std::vector<ExtPoly>& ps) {
  for (const auto& p : ps) {
    if (!as_standard(p)) return false;
  }
  return true;
}

GaussianRational standard_number(const std::string& text) {
  const LCNumber x = parse_number(text);
  if (!x.is_standard()) throw AlgebraError(ErrorCode::kInvalidArgument, "expected a standard number: " + text);
  return x.coefficient_at(Rational(0));
}

std::vector<Var> parse_vars(const std::string& text) {
  std::vector<Var> out;
  for (const auto& p : parse_poly_list(text)) {
    if (p.size() != 1 || p.terms()[0].first.degree() != 1 || !(p.terms()[0].second == LCNumber(1))) {
      throw AlgebraError(ErrorCode::kInvalidArgument, "expected a variable, found " + format_poly(p));
    }
    out.push_back(p.terms()[0].first.entries()[0].first);
  }
  return out;
}

StdMatrix parse_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, "malformed matrix JSON");
  }
  if (!j.is_array()) throw ParseError(0, "matrix must be a JSON array of rows");
  std::vector<std::vector<StdPoly>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError(0, "matrix rows must be arrays");
    std::vector<StdPoly> r;
    for (const auto& e : row) {
      if (!e.is_string()) throw ParseError(0, "matrix entries must be polynomial strings");
      r.push_back(standard(parse_poly(e.get<std::string>())));
    }
    rows.push_back(std::move(r));
  }
  return StdMatrix::from_rows(rows);
}

Json kernel_json(const KernelExtensionReport& r) {
  Json j;
  j["standard_kernel"] = vectors(r.standard_kernel);
  j["extended_kernel"] = vectors(r.extended_kernel);
  j["standard_in_extended"] = r.standard_in_extended;
  j["extended_in_standard"] = r.extended_in_standard;
  j["pass"] = r.pass;
  return j;
}

Json family_vars_json(const FamilyVariables& v) {
  Json j;
  j["base"] = var_name(v.base);
  j["parameters"] = Json::array();
  for (Var p : v.parameters) j["parameters"].push_back(var_name(p));
  j["extra"] = v.extra ? Json(var_name(*v.extra)) : Json(nullptr);
  return j;
}

FamilySpec parse_family(const std::string& params, bool extra) {
  FamilySpec spec;
  for (const auto& p : parse_poly_list(params)) {
    auto s = as_standard(p);
    if (!s || !s->is_constant()) throw AlgebraError(ErrorCode::kInvalidArgument, "parameters must be standard numbers");
    spec.parameters.push_back(s->constant_term());
  }
  spec.include_extra = extra;
  return spec;
}

Json closure_json(const ShadowClosureReport& r) {
  Json j;
  Json inst;
  inst["roots"] = Json::array();
  for (const auto& x : r.roots) inst["roots"].push_back(to_string(x));
  inst["polynomial"] = format_poly(r.f);
  inst["reduced_shadow"] = format_poly(r.reduced_shadow);
  inst["shadow_fully_factored"] = r.rhs_complete;
  j["instance"] = inst;
  j["lhs"] = Json::array();
  for (const auto& c : r.lhs) j["lhs"].push_back(to_string(c));
  j["rhs"] = Json::array();
  for (const auto& c : r.rhs) j["rhs"].push_back(to_string(c));
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json x;
    x["point"] = to_string(w.point);
    x["lift"] = to_string(w.lift);
    x["residual_valuation"] = to_string(w.residual);
    x["closest_root"] = to_string(w.closest_root);
    x["distance_valuation"] = to_string(w.distance);
    x["in_halo"] = w.in_halo;
    x["residual_ok"] = w.residual_ok;
    x["closest_in_halo"] = w.closest_in_halo;
    j["witnesses"].push_back(x);
  }
  j["pass"] = r.pass;
  return j;
}

// Runs `f` on standard polynomials when every input is standard, otherwise on
// their extended versions.
template <class F>
Json on_domain(const std::vector<ExtPoly>& polys, F f) {
  Json j;
  if (all_standard(polys)) {
    j["domain"] = "standard";
    f(standard(polys), j);
  } else {
    j["domain"] = "extended";
    f(polys, j);
  }
  return j;
}

Json run_corpus(const std::string& path, unsigned threads);

struct Parsed {
  std::function<Json()> action;
};

// Builds the CLI11 app; the selected subcommand stores its action in `parsed`.
void build_app(CLI::App& app, SessionConfig& cfg, Parsed& parsed, const Session& session) {
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  app.add_option("--trunc", cfg.truncation, "truncation order (positive rational)");
  app.add_option("--order", cfg.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--power-bound", cfg.power_bound, "bound for power searches");

  struct Inputs {
    std::string value, poly, ideal, vars, at, roots, gens, denominators, numerators, params, equation, solution,
        matrix, a, b, file;
    std::uint32_t n = 0;
    std::size_t count = 0;
    unsigned threads = 1;
    bool extra = false;
  };
  auto in = std::make_shared<Inputs>();
  const Session* s = &session;

  auto number_cmd = [&](const char* name, const char* help, std::function<Json(const LCNumber&)> f) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("value", in->value, "number")->required();
    c->callback([&parsed, in, f] { parsed.action = [in, f] { return f(parse_number(in->value)); }; });
  };
  number_cmd("st", "standard part of a number", [](const LCNumber& x) { return Json(to_string(lc_st(x))); });
  number_cmd("classify", "valuation and magnitude class", [](const LCNumber& x) {
    const Classification c = lc_classify(x);
    Json j;
    j["valuation"] = to_string(c.valuation);
    j["class"] = std::string(to_string(c.kind));
    return j;
  });

  auto poly_cmd = [&](const char* name, const char* help, std::function<Json(const ExtPoly&)> f) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("poly", in->value, "polynomial")->required();
    c->callback([&parsed, in, f] { parsed.action = [in, f] { return f(parse_poly(in->value)); }; });
  };
  poly_cmd("shadow-poly", "coefficient-wise standard part", [](const ExtPoly& f) { return Json(format_poly(poly_shadow(f))); });
  poly_cmd("normalize", "divide by a coefficient of maximal magnitude",
           [](const ExtPoly& f) { return Json(format_poly(max_abs_normalize(f))); });

  {
    auto* c = app.add_subcommand("reduce-on-variety", "reduce f on X = V(ideal)");
    c->add_option("--poly", in->poly)->required();
    c->add_option("--ideal", in->ideal, "generators of I(X)");
    c->add_option("--vars", in->vars, "ambient variables");
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const ExtPoly f = parse_poly(in->poly);
        const std::vector<StdPoly> gens = standard(parse_poly_list(in->ideal));
        std::vector<Var> vars;
        if (!in->vars.empty()) {
          vars = parse_vars(in->vars);
        } else {
          std::set<Var> all = f.variables();
          for (const auto& g : gens) {
            for (Var v : g.variables()) all.insert(v);
          }
          vars.assign(all.begin(), all.end());
        }
        const VarietyReduction r = reduce_on_variety(f, VarietyPresentation(vars, gens));
        Json j;
        j["all_of_x"] = r.all_of_x;
        j["g"] = r.all_of_x ? Json(nullptr) : Json(format_poly(r.g));
        j["shadow"] = r.all_of_x ? Json(nullptr) : Json(format_poly(poly_shadow(r.g)));
        j["iterations"] = r.iterations;
        j["same_ideal"] = r.same_ideal;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("lift", "Newton-Puiseux lift of a shadow root");
    c->add_option("--poly", in->poly)->required();
    c->add_option("--at", in->at, "standard root of the shadow")->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        const ExtPoly f = parse_poly(in->poly);
        const PointAssignment p = newton_puiseux_lift(f, standard_number(in->at), s->trunc);
        Json j;
        j["point"] = point_json(p);
        j["residual_valuation"] = to_string(poly_eval(f, p).valuation());
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("open-witness", "point near a where f does not vanish");
    c->add_option("--poly", in->poly)->required();
    c->add_option("--at", in->at, "standard point, e.g. \"z1=0, z2=1\"")->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        const ExtPoly f = parse_poly(in->poly);
        const PointAssignment a = parse_point(in->at);
        if (!a.is_standard()) throw AlgebraError(ErrorCode::kInvalidArgument, "center must be a standard point");
        const PointAssignment xi = open_shadow_witness(f, a, s->seed);
        Json j;
        j["point"] = point_json(xi);
        j["value"] = to_string(poly_eval(f, xi));
        j["in_halo"] = halo_member(xi, a);
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("verify-closure", "shadow closure check for prod (z1 - root)");
    c->add_option("--roots", in->roots)->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        std::vector<LCNumber> roots;
        for (const auto& p : parse_poly_list(in->roots)) {
          if (!p.is_constant()) throw AlgebraError(ErrorCode::kInvalidArgument, "roots must be numbers");
          roots.push_back(p.constant_term());
        }
        return closure_json(verify_shadow_closure(roots, s->trunc));
      };
    });
  }
  {
    auto* c = app.add_subcommand("groebner", "reduced Groebner basis");
    c->add_option("--gens", in->gens)->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        Json j = on_domain(parse_poly_list(in->gens), [s](const auto& gens, Json& out) {
          out["order"] = s->order.name();
          out["basis"] = strings(buchberger(gens, s->order));
        });
        return j;
      };
    });
  }
  auto membership_cmd = [&](const char* name, const char* help, bool radical) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--ideal", in->ideal)->required();
    c->add_option("--poly", in->poly)->required();
    c->callback([&parsed, in, s, radical] {
      parsed.action = [in, s, radical] {
        std::vector<ExtPoly> all = parse_poly_list(in->ideal);
        all.push_back(parse_poly(in->poly));
        bool result = false;
        on_domain(all, [&](auto gens, Json&) {
          auto f = gens.back();
          gens.pop_back();
          using K = typename std::decay_t<decltype(f)>::Coeff;
          const Ideal<K> I(std::move(gens), s->order);
          result = radical ? radical_member(f, I) : ideal_member(f, I);
        });
        return Json(result);
      };
    });
  };
  membership_cmd("member", "ideal membership", false);
  membership_cmd("radical-member", "radical membership", true);
  {
    auto* c = app.add_subcommand("contract", "contraction to z1..zn");
    c->add_option("--ideal", in->ideal)->required();
    c->add_option("--n", in->n)->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        return on_domain(parse_poly_list(in->ideal), [&](const auto& gens, Json& out) {
          using K = typename std::decay_t<decltype(gens.front())>::Coeff;
          const Ideal<K> I(gens, s->order);
          out["n"] = in->n;
          out["generators"] = strings(contraction(I, in->n).basis());
        });
      };
    });
  }
  {
    auto* c = app.add_subcommand("syzygy", "solutions of sum a_i x_i = 0");
    c->add_option("--gens", in->gens)->required();
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        return on_domain(parse_poly_list(in->gens), [&](const auto& a, Json& out) {
          const auto b = syzygy_basis(a, s->order);
          out["equation"] = strings(b.equation);
          out["generators"] = vectors(b.generators);
        });
      };
    });
  }
  {
    auto* c = app.add_subcommand("point-ideal", "recognize <z_i - a_i>");
    c->add_option("--ideal", in->ideal)->required();
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const PointIdealResult r = is_point_ideal(StdIdeal(standard(parse_poly_list(in->ideal))));
        Json j;
        j["point"] = r.point ? point_json(*r.point) : Json(nullptr);
        j["reason"] = r.reason;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("domain-witness", "point where all denominators are nonzero");
    c->add_option("--denominators", in->denominators)->required();
    c->add_option("--numerators", in->numerators);
    c->add_option("--count", in->count, "number of components (default all)");
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const std::vector<StdPoly> dens = standard(parse_poly_list(in->denominators));
        std::vector<StdPoly> nums = standard(parse_poly_list(in->numerators));
        if (nums.empty()) nums.assign(dens.size(), StdPoly::constant(GaussianRational(1)));
        if (nums.size() != dens.size()) {
          throw AlgebraError(ErrorCode::kInvalidArgument, "numerators and denominators differ in number");
        }
        std::vector<RationalComponent> comps;
        for (std::size_t i = 0; i < dens.size(); ++i) comps.push_back({nums[i], dens[i]});
        const std::size_t count = in->count == 0 ? comps.size() : in->count;
        const DomainWitness w = domain_witness(RationalMap(std::move(comps)), count);
        Json j;
        j["point"] = point_json(w.point);
        j["values"] = Json::array();
        for (const auto& v : w.values) j["values"].push_back(to_string(v));
        j["certificate"] = w.certificate;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("family-build", "generators z_a*(z_base - a) - 1");
    c->add_option("--params", in->params)->required();
    c->add_flag("--extra", in->extra, "add z_extra*z_base - 1");
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const FamilySpec spec = parse_family(in->params, in->extra);
        Json j;
        j["variables"] = family_vars_json(family_variables(spec));
        j["generators"] = strings(build_family(spec));
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("family-check", "finite checks on the family");
    c->add_option("--params", in->params)->required();
    c->add_flag("--extra", in->extra, "add z_extra*z_base - 1");
    c->callback([&parsed, in, s] {
      parsed.action = [in, s] {
        const FamilyReport r = family_checks(parse_family(in->params, in->extra), s->power_bound);
        Json j;
        j["variables"] = family_vars_json(r.vars);
        j["generators"] = strings(r.generators);
        j["proper"] = r.proper;
        j["powers"] = Json::array();
        for (const auto& [k, outside] : r.powers) {
          Json p;
          p["k"] = k;
          p["outside"] = outside;
          j["powers"].push_back(p);
        }
        j["common_zero"] = point_json(r.common_zero);
        j["common_zero_verified"] = r.common_zero_verified;
        j["pass"] = r.pass;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("flat-witness", "write an extended solution through standard syzygies");
    c->add_option("--equation", in->equation)->required();
    c->add_option("--solution", in->solution)->required();
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const FlatnessWitness w = flatness_witness(standard(parse_poly_list(in->equation)), parse_poly_list(in->solution));
        Json j;
        j["syzygies"] = vectors(w.basis.generators);
        j["r"] = strings(w.r);
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("kernel-check", "kernel generators agree over both domains");
    c->add_option("--matrix", in->matrix, "JSON array of rows of polynomial strings")->required();
    c->callback([&parsed, in] { parsed.action = [in] { return kernel_json(kernel_extension_check(parse_matrix(in->matrix))); }; });
  }
  {
    auto* c = app.add_subcommand("exact-check", "is im A = ker B, over both domains");
    c->add_option("--a", in->a)->required();
    c->add_option("--b", in->b)->required();
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const ExactnessReport r = exactness_transfer_check(parse_matrix(in->a), parse_matrix(in->b));
        Json j;
        j["standard_exact"] = r.standard_exact;
        j["extended_exact"] = r.extended_exact;
        j["agree"] = r.agree;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("tensor-check", "extension of coker P");
    c->add_option("--matrix", in->matrix)->required();
    c->callback([&parsed, in] {
      parsed.action = [in] {
        const TensorIsoReport r = tensor_iso_check(parse_matrix(in->matrix));
        Json j;
        j["surjective"] = r.surjective;
        j["kernel"] = kernel_json(r.kernel);
        j["witnesses"] = Json::array();
        for (const auto& w : r.witnesses) j["witnesses"].push_back(strings(w));
        j["pass"] = r.pass;
        return j;
      };
    });
  }
  {
    auto* c = app.add_subcommand("corpus", "run the fixture corpus");
    c->add_option("--file", in->file)->default_val("fixtures/corpus.json");
    c->add_option("--threads", in->threads)->default_val(1)->check(CLI::Range(1U, 64U));
    c->callback([&parsed, in] { parsed.action = [in] { return run_corpus(in->file, in->threads); }; });
  }
}

Session make_session(const SessionConfig& cfg) {
  Rational t;
  if (t.set_str(cfg.truncation, 10) != 0 || t.get_den() == 0) throw UsageError("--trunc must be a rational number");
  t.canonicalize();
  if (sgn(t) <= 0) throw UsageError("--trunc must be positive");
  Session s;
  s.trunc = TruncationOrder(t);
  s.order = cfg.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
  s.seed = cfg.seed;
  s.power_bound = cfg.power_bound;
  return s;
}

CommandResult envelope(const SessionConfig& cfg, int code, const Json& payload, bool ok) {
  Json j;
  j["config"] = config_json(cfg);
  j["ok"] = ok;
  j[ok ? "result" : "error"] = payload;
  return {code, j.dump()};
}

Json error_json(std::string_view code, const std::string& message) {
  Json e;
  e["code"] = std::string(code);
  e["message"] = message;
  return e;
}

Json run_corpus(const std::string& path, unsigned threads) {
  std::ifstream file(path);
  if (!file) throw AlgebraError(ErrorCode::kInvalidArgument, "cannot open corpus file " + path);
  Json spec;
  try {
    spec = Json::parse(file);
  } catch (const Json::parse_error&) {
    throw ParseError(0, "malformed corpus file " + path);
  }
  const Json& fixtures = spec.at("fixtures");
  const std::size_t n = fixtures.size();
  std::vector<std::vector<std::string>> args(n);
  for (std::size_t i = 0; i < n; ++i) {
    args[i] = fixtures[i].at("args").get<std::vector<std::string>>();
    if (!args[i].empty() && args[i][0] == "corpus") throw UsageError("a corpus cannot contain corpus runs");
  }
  std::vector<CommandResult> results(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) results[i] = run_command(args[i]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json out;
  out["count"] = n;
  out["fixtures"] = Json::array();
  bool all_match = true;
  for (std::size_t i = 0; i < n; ++i) {
    Json f;
    f["name"] = fixtures[i].value("name", "fixture-" + std::to_string(i));
    f["exit_code"] = results[i].exit_code;
    if (fixtures[i].contains("expect_exit")) {
      const bool match = fixtures[i]["expect_exit"].get<int>() == results[i].exit_code;
      f["matches"] = match;
      all_match = all_match && match;
    }
    f["output"] = Json::parse(results[i].output);
    out["fixtures"].push_back(f);
  }
  out["all_match"] = all_match;
  return out;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  SessionConfig cfg;
  Parsed parsed;
  Session session;
  CLI::App app{"Exact computations over a non-Archimedean extension of Q(i)", "nsag"};
  build_app(app, cfg, parsed, session);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    session = make_session(cfg);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return envelope(cfg, 2, error_json("usage", compact(e.what())), false);
  } catch (const UsageError& e) {
    return envelope(cfg, 2, error_json("usage", e.what()), false);
  }
  try {
    return envelope(cfg, 0, parsed.action(), true);
  } catch (const ParseError& e) {
    return envelope(cfg, 2, error_json(error_code_name(e.code()), e.what()), false);
  } catch (const AlgebraError& e) {
    return envelope(cfg, 1, error_json(error_code_name(e.code()), e.what()), false);
  } catch (const UsageError& e) {
    return envelope(cfg, 2, error_json("usage", e.what()), false);
  } catch (const Json::exception& e) {
    return envelope(cfg, 2, error_json("parse_error", e.what()), false);
  }
}

}  // namespace nsag::cli
