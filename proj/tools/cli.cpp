#include "cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ternac/coboundary.hpp"
#include "ternac/document.hpp"
#include "ternac/identity.hpp"
#include "ternac/nogo.hpp"
#include "ternac/registry.hpp"
#include "ternac/takhtajan.hpp"

namespace ternac::cli {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  Json json;
  std::ostringstream text;
  int status = kOk;
};

struct Source {
  std::string file;
  std::string example;
};

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const ExactMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

std::string tuple_text(const std::vector<std::size_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? ", e" : "e") + std::to_string(t[i] + 1);
  return out + ")";
}

Json algebra_summary(const Algebra& alg) {
  return Json{{"dim", alg.dim()}, {"arity", alg.arity()}, {"field", field_name(alg.field())}};
}

Algebra load(const Source& src, const Limits& limits) {
  if (src.file.empty() == src.example.empty()) throw InputError("give exactly one of FILE or --example NAME");
  Algebra alg;
  try {
    alg = src.file.empty() ? builtin_example(src.example) : read_algebra(src.file);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (alg.dim() > limits.max_dim)
    throw InputError("dimension " + std::to_string(alg.dim()) + " exceeds the limit " +
                     std::to_string(limits.max_dim) + " (TERNAC_MAX_DIM)");
  return alg;
}

void require_degree(std::size_t p, const Limits& limits) {
  if (p == 0) throw InputError("degrees start at 1");
  if (p > limits.max_degree)
    throw InputError("degree " + std::to_string(p) + " exceeds the limit " + std::to_string(limits.max_degree) +
                     " (TERNAC_MAX_DEGREE)");
}

template <class T, class F>
T parse_or_input_error(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("file", src.file, "Algebra document (JSON)");
  cmd->add_option("--example", src.example, "Use a built-in algebra instead of a file");
}

// ---- commands ---------------------------------------------------------------

void check_cmd(const Algebra& alg, IdentityKind kind, Report& r) {
  const IdentityReport rep = check_identity(alg, kind);
  r.json = Json{{"command", "check"}, {"identity", identity_name(kind)}, {"algebra", algebra_summary(alg)},
                {"holds", rep.holds}, {"counterexample", nullptr}};
  r.text << "identity " << identity_name(kind) << ": " << (rep.holds ? "holds" : "fails") << "\n";
  if (rep.counterexample) {
    const auto& c = *rep.counterexample;
    Json tuple = Json::array();
    for (auto i : c.tuple) tuple.push_back(i + 1);
    r.json["counterexample"] = Json{{"tuple", tuple}, {"clause", c.clause}, {"defect", to_json(c.defect)}};
    r.text << "  first failure at " << tuple_text(c.tuple) << " in " << c.clause << ", defect "
           << vector_text(c.defect) << "\n";
  }
  r.status = rep.holds ? kOk : kFails;
}

void cohomology_cmd(const Algebra& alg, Theory theory, std::size_t p, WeakVariant variant, Report& r) {
  const CohomologyReport rep = cohomology(alg, theory, p, variant);
  r.json = Json{{"command", "cohomology"}, {"theory", theory_name(theory)}, {"p", p}, {"algebra", algebra_summary(alg)},
                {"dim_cochains", rep.dim_cochains}, {"dim_cocycles", rep.dim_cocycles},
                {"dim_coboundaries", rep.dim_coboundaries}, {"dim_h", rep.dim_h}};
  if (theory == Theory::TernaryWeak) r.json["variant"] = weak_variant_name(variant);
  r.text << "H^" << p << " (" << theory_name(theory) << "): cochains " << rep.dim_cochains << ", cocycles "
         << rep.dim_cocycles << ", coboundaries " << rep.dim_coboundaries << ", dim H = " << rep.dim_h << "\n";
}

void derivations_cmd(const Algebra& alg, Report& r) {
  const auto basis = derivations(alg);
  Json list = Json::array();
  r.text << "derivations: dimension " << basis.size() << "\n";
  for (const auto& f : basis) {
    ExactMatrix a(alg.dim(), alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j)
      for (std::size_t s = 0; s < alg.dim(); ++s) a(s, j) = f.at(j, s);
    list.push_back(to_json(a));
    r.text << "  [";
    for (std::size_t s = 0; s < a.rows(); ++s) {
      Vector row(a.row(s).begin(), a.row(s).end());
      r.text << (s ? " " : "") << vector_text(row);
    }
    r.text << "]\n";
  }
  r.json = Json{{"command", "derivations"}, {"algebra", algebra_summary(alg)}, {"dimension", basis.size()},
                {"basis", list}};
}

void verify_cmd(const Algebra& alg, Theory theory, std::size_t pmax, WeakVariant variant, Report& r) {
  const auto reps = verify_complex(alg, theory, pmax, variant);
  Json degrees = Json::array();
  bool all = true;
  for (const auto& c : reps) {
    all = all && c.vanishes;
    degrees.push_back(Json{{"p", c.p},
                           {"outer", {c.outer_rows, c.outer_cols}},
                           {"inner", {c.outer_cols, c.inner_cols}},
                           {"vanishes", c.vanishes}});
    r.text << "delta^" << c.p + 1 << " ∘ delta^" << c.p << " (" << c.outer_rows << "x" << c.outer_cols << " by "
           << c.outer_cols << "x" << c.inner_cols << "): " << (c.vanishes ? "zero" : "NONZERO") << "\n";
  }
  r.json = Json{{"command", "verify-complex"}, {"theory", theory_name(theory)}, {"pmax", pmax},
                {"algebra", algebra_summary(alg)}, {"degrees", degrees}, {"holds", all}};
  if (theory == Theory::TernaryWeak) r.json["variant"] = weak_variant_name(variant);
  if (reps.empty()) r.text << "no composable pair of coboundaries up to p = " << pmax << "\n";
  r.status = all ? kOk : kFails;
}

void nogo_cmd(NogoCase c, std::optional<RuleSet> rules, Report& r) {
  const ConstraintSystem sys = rules ? derive_constraints(c, *rules) : derive_constraints(c);
  const NogoReport rep = solve(sys);
  const Ansatz ansatz = build_ansatz(c);
  Json unknowns = Json::array(), patterns = Json::array(), rows = Json::array(), null = Json::array();
  for (std::size_t k = 0; k < ansatz.patterns.size(); ++k) {
    unknowns.push_back("a" + std::to_string(k + 1));
    patterns.push_back(ansatz.patterns[k].str());
  }
  r.text << "case " << nogo_case_name(c) << " (rules " << rule_name(sys.rules) << "), " << sys.rows.size()
         << " constraints on " << ansatz.patterns.size() << " unknowns\n";
  for (const auto& row : sys.rows) {
    rows.push_back(Json{{"term", row.term.str()},
                        {"combination", combination_string(row.coefficients)},
                        {"coefficients", to_json(row.coefficients)}});
    r.text << "  " << combination_string(row.coefficients) << " = 0    [" << row.term.str() << "]\n";
  }
  for (const auto& v : rep.nullspace) {
    null.push_back(to_json(v));
    r.text << "  solution " << combination_string(v) << "\n";
  }
  r.text << "nullspace dimension " << rep.dimension << ": " << rep.verdict << "\n";
  r.json = Json{{"command", "nogo"},   {"case", nogo_case_name(c)},     {"rules", rule_name(sys.rules)},
                {"unknowns", unknowns}, {"patterns", patterns},        {"rows", rows},
                {"nullspace", null},    {"dimension", rep.dimension}, {"verdict", rep.verdict}};
}

Json reading_json(const AssocReading& reading, std::ostream& text) {
  Json constraints = Json::array(), solutions = Json::array();
  text << "  " << reading.name << " reading, unknowns";
  for (const auto& v : reading.variables) text << " " << v;
  text << "\n";
  for (const auto& p : reading.constraints) {
    constraints.push_back(p.str(reading.variables));
    text << "    " << p.str(reading.variables) << " = 0\n";
  }
  for (const auto& s : reading.solutions) {
    solutions.push_back(to_json(s));
    text << "    solution " << vector_text(s) << "\n";
  }
  if (reading.solutions.empty()) text << "    no solutions\n";
  return Json{{"name", reading.name}, {"variables", reading.variables}, {"constraints", constraints},
              {"solutions", solutions}};
}

void analyze_cmd(AssocType type, Field field, Report& r) {
  const AssocTypeReport rep = assoc_type_analysis(type, field);
  r.text << "induced product of " << assoc_type_name(type) << " type over " << field_name(field) << "\n";
  Json expansion = Json::array(), sectors = Json::array(), unnested = Json::array();
  for (const auto& [t, c] : rep.expansion)
    expansion.push_back(Json{{"term", t.str()}, {"coefficient", c.str(kAlphaLambda)}});
  for (const auto& s : rep.split.sectors) {
    Json nest = Json::array();
    for (const auto& p : s.nestings) nest.push_back(p.str(kAlphaLambda));
    sectors.push_back(Json{{"context", s.context.str()}, {"left_middle_right", nest}});
  }
  for (const auto& [t, c] : rep.split.unnested)
    unnested.push_back(Json{{"term", t.str()}, {"coefficient", c.str(kAlphaLambda)}});
  Json readings = Json::array();
  readings.push_back(reading_json(rep.primary, r.text));
  if (rep.strict) readings.push_back(reading_json(*rep.strict, r.text));
  Json al = Json::array(), ids = Json::array();
  for (const auto& [a, l] : rep.alpha_lambda) {
    al.push_back(Json{{"alpha", a.str()}, {"lambda", l.str()}});
    r.text << "  (α, λ) = (" << a << ", " << l << ")\n";
  }
  for (std::size_t k = 0; k < rep.required_identities.size(); ++k) {
    ids.push_back(Json{{"coefficients", to_json(rep.required_identities[k])}, {"matches", rep.identity_matches[k]}});
    r.text << "  needs identity " << vector_text(rep.required_identities[k]) << " on (left, middle, right) nesting: "
           << (rep.identity_matches[k] == "none" ? "not a known identity" : rep.identity_matches[k]) << "\n";
  }
  r.text << "construction " << (rep.construction_possible ? "possible" : "impossible") << "\n";
  r.json = Json{{"command", "takhtajan"},
                {"mode", "analyze"},
                {"identity", assoc_type_name(type)},
                {"field", field_name(field)},
                {"expansion", expansion},
                {"sectors", sectors},
                {"unnested", unnested},
                {"readings", readings},
                {"solutions", al},
                {"required_identities", ids},
                {"construction_possible", rep.construction_possible}};
  r.status = rep.construction_possible ? kOk : kFails;
}

void lift_cmd(const Algebra& alg, const Scalar& alpha, InducedVariant variant, Report& r) {
  const Algebra w = induced_binary(alg, alpha, variant);
  const bool assoc = check_identity(w, IdentityKind::BinaryAssociative).holds;
  r.json = Json{{"command", "takhtajan"},
                {"mode", "lift"},
                {"alpha", alpha.str()},
                {"variant", variant == InducedVariant::Standard ? "standard" : "nambu"},
                {"binary_associative", assoc},
                {"algebra", Json::parse(algebra_to_json(w))}};
  r.text << "induced product on V⊗V (dim " << w.dim() << "), alpha = " << alpha << ": "
         << (assoc ? "associative" : "not associative") << "\n"
         << algebra_to_json(w);
}

void recover_cmd(const Algebra& alg, std::size_t pmax, Report& r) {
  const auto results = recovery_check(alg, pmax);
  Json degrees = Json::array();
  bool all = true;
  for (std::size_t p = 1; p <= pmax; ++p) {
    Json per = Json::object();
    std::string chosen;
    r.text << "p = " << p << ":";
    for (const auto& x : results) {
      if (x.p != p) continue;
      per[weak_variant_name(x.variant)] = recovery_status_name(x.status);
      r.text << " " << weak_variant_name(x.variant) << " " << recovery_status_name(x.status) << ";";
      if (chosen.empty() && x.status != RecoveryStatus::Fails) chosen = weak_variant_name(x.variant);
    }
    r.text << "\n";
    all = all && !chosen.empty();
    degrees.push_back(Json{{"p", p}, {"variants", per}, {"commutes", !chosen.empty()},
                           {"variant", chosen.empty() ? Json(nullptr) : Json(chosen)}});
  }
  r.json = Json{{"command", "takhtajan"}, {"mode", "recover"}, {"algebra", algebra_summary(alg)},
                {"degrees", degrees}, {"holds", all}};
  r.status = all ? kOk : kFails;
}

void examples_list(Report& r) {
  Json list = Json::array();
  for (const auto& e : builtin_examples()) {
    list.push_back(Json{{"name", e.name}, {"description", e.description}});
    r.text << e.name << "  " << e.description << "\n";
  }
  r.text << "zero:N:ARITY  the zero algebra of dimension N and arity 2 or 3\n";
  r.json = Json{{"command", "examples"}, {"examples", list}};
}

std::size_t parse_limit(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  const long long x = std::strtoll(v, &end, 10);
  if (*end != '\0' || x <= 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(x);
}

}  // namespace

Limits limits_from_environment() {
  Limits l;
  l.max_dim = parse_limit("TERNAC_MAX_DIM", l.max_dim);
  l.max_degree = parse_limit("TERNAC_MAX_DEGREE", l.max_degree);
  return l;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Limits limits;
  try {
    limits = limits_from_environment();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return run(args, out, err, limits);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Limits& limits) {
  CLI::App app{"Exact identity checks, cohomology and no-go computations for ternary and binary algebras", "ternac"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  Source src;
  std::string identity, theory, variant = "explicit", nogo_case, rules, mode = "analyze", assoc = "total",
                        field = "Q", alpha = "0", action, name;
  std::size_t p = 1, pmax = 2;
  bool nambu = false;

  auto* check = app.add_subcommand("check", "Check an identity on every basis tuple");
  check->add_option("--identity", identity, "Identity kind")->required();
  add_source(check, src);

  auto* coh = app.add_subcommand("cohomology", "Dimensions of cocycles, coboundaries and cohomology");
  coh->add_option("--theory", theory, "partial, weak, alt1, alt2, hochschild or skew")->required();
  coh->add_option("--p", p, "Degree");
  coh->add_option("--variant", variant, "Weak sign convention: explicit, general or remark");
  add_source(coh, src);

  auto* der = app.add_subcommand("derivations", "Basis of the derivations");
  add_source(der, src);

  auto* ver = app.add_subcommand("verify-complex", "Check that consecutive coboundaries compose to zero");
  ver->add_option("--theory", theory, "partial, weak, alt1, alt2, hochschild or skew")->required();
  ver->add_option("--pmax", pmax, "Highest degree");
  ver->add_option("--variant", variant, "Weak sign convention: explicit, general or remark");
  add_source(ver, src);

  auto* nogo = app.add_subcommand("nogo", "Solve for a third coboundary of the given shape");
  nogo->add_option("--case", nogo_case, "ternary-partial, ternary-alt1, ternary-alt2, binary-skew, ternary-weak")
      ->required();
  nogo->add_option("--rules", rules, "Rewrite with another identity: partial, weak, total, alt1, alt2, skew, assoc");

  auto* tak = app.add_subcommand("takhtajan", "Binary product on V⊗V induced by a ternary product");
  tak->add_option("--mode", mode, "analyze, lift or recover")->check(CLI::IsMember({"analyze", "lift", "recover"}));
  tak->add_option("--identity", assoc, "total or partial (analyze)");
  tak->add_option("--field", field, "Q or Qi (analyze)");
  tak->add_option("--alpha", alpha, "Scalar alpha (lift)");
  tak->add_flag("--nambu", nambu, "Bracket form y1⊗[x1,x2,y2] for the second summand (lift)");
  tak->add_option("--pmax", pmax, "Highest degree (recover)");
  add_source(tak, src);

  auto* ex = app.add_subcommand("examples", "List or emit built-in algebras");
  ex->add_option("action", action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
  ex->add_option("name", name, "Example name (emit)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Report r;
  try {
    if (*check) {
      const IdentityKind kind = parse_or_input_error<IdentityKind>([&] { return parse_identity(identity); });
      const Algebra alg = load(src, limits);
      if (identity_arity(kind) != alg.arity())
        throw InputError("identity " + identity_name(kind) + " needs arity " + std::to_string(identity_arity(kind)));
      check_cmd(alg, kind, r);
    } else if (*coh) {
      const Theory t = parse_or_input_error<Theory>([&] { return parse_theory(theory); });
      const WeakVariant v = parse_or_input_error<WeakVariant>([&] { return parse_weak_variant(variant); });
      require_degree(p, limits);
      cohomology_cmd(load(src, limits), t, p, v, r);
    } else if (*der) {
      derivations_cmd(load(src, limits), r);
    } else if (*ver) {
      const Theory t = parse_or_input_error<Theory>([&] { return parse_theory(theory); });
      const WeakVariant v = parse_or_input_error<WeakVariant>([&] { return parse_weak_variant(variant); });
      require_degree(pmax, limits);
      verify_cmd(load(src, limits), t, pmax, v, r);
    } else if (*nogo) {
      const NogoCase c = parse_or_input_error<NogoCase>([&] { return parse_nogo_case(nogo_case); });
      std::optional<RuleSet> rs;
      if (!rules.empty()) rs = parse_or_input_error<RuleSet>([&] { return parse_rule(rules); });
      nogo_cmd(c, rs, r);
    } else if (*tak) {
      if (mode == "analyze") {
        const AssocType t = parse_or_input_error<AssocType>([&] { return parse_assoc_type(assoc); });
        const Field f = parse_or_input_error<Field>([&] { return parse_field(field); });
        analyze_cmd(t, f, r);
      } else if (mode == "lift") {
        const Scalar a = parse_or_input_error<Scalar>([&] { return Scalar::parse(alpha); });
        const Algebra alg = load(src, limits);
        if (!alg.is_ternary()) throw InputError("lift needs a ternary algebra");
        lift_cmd(alg, a, nambu ? InducedVariant::Nambu : InducedVariant::Standard, r);
      } else {
        require_degree(pmax, limits);
        const Algebra alg = load(src, limits);
        if (!alg.is_ternary()) throw InputError("recover needs a ternary algebra");
        recover_cmd(alg, pmax, r);
      }
    } else if (*ex) {
      if (action == "list") {
        examples_list(r);
      } else {
        if (name.empty()) throw InputError("examples emit needs a NAME");
        const Algebra alg = parse_or_input_error<Algebra>([&] { return builtin_example(name); });
        out << algebra_to_json(alg);
        return kOk;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UndefinedOperator& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (format == "text") out << r.text.str();
  else out << r.json.dump(2) << "\n";
  return r.status;
}

}  // namespace ternac::cli
