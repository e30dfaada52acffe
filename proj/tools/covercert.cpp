// covercert: exact analysis and certification of plane covers of the line.
//
// Subcommands:
//   analyze      discriminant, branch and infinity report for a curve input
//   vset         emit the defining equation system and the membership report
//   verify       full pipeline; exit 0 iff every certified check passes
//   bounds       evaluate the closed-form bounds exactly
//   lemma-suite  seeded randomized suites for the height/series lemmas
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 unusable input.

#include <CLI11.hpp>

#include <covercert/bounds.hpp>
#include <covercert/cover.hpp>
#include <covercert/io.hpp>
#include <covercert/suites.hpp>
#include <covercert/vset.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace covercert;
using covercert::io::Json;

namespace {

struct Options {
  std::string input;
  std::string out;
  bool json = false;
  std::uint64_t seed = 0;
  long prec = 256;
  long count = 500;
  std::vector<std::string> phi_overrides;
  std::string emit_path;
  long genus = 0, degree = 2;
  std::string height_arg = "1";
  std::string fault;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream os(opt.out, std::ios::binary);
  require(os.good(), Err::InvalidInput, "cannot open output file " + opt.out);
  os << text;
}

Json load_input(const std::string& path) {
  std::ifstream is(path);
  require(is.good(), Err::InvalidInput, "cannot read input file " + path);
  Json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    fail(Err::InvalidInput, std::string("input is not valid JSON: ") + e.what());
  }
  return j;
}

// ---- pipeline ---------------------------------------------------------------

template <class K>
LogValue declared_height(const std::vector<K>& declared) {
  std::vector<LogValue> hs{LogValue::zero()};
  for (const auto& a : declared) hs.push_back(scalar_height(a));
  return logvalue_sup(hs);
}

template <class K>
void apply_phi_overrides(const VarAtlas& atlas, PhiVector<K>& phi, const std::vector<std::string>& ovs,
                         const FieldPtr& field) {
  if (ovs.empty()) return;
  std::vector<K> flat = flatten_phi(atlas, phi);
  for (const auto& ov : ovs) {
    auto eq = ov.find('=');
    require(eq != std::string::npos, Err::InvalidInput, "override must look like Name=value");
    std::string name = ov.substr(0, eq);
    std::string val = ov.substr(eq + 1);
    bool found = false;
    for (long i = 0; i < atlas.omega; ++i) {
      if (atlas.names[static_cast<size_t>(i)] == name) {
        flat[static_cast<size_t>(i)] = io::parse_scalar(Json(val), field, static_cast<K*>(nullptr));
        found = true;
        break;
      }
    }
    require(found, Err::InvalidInput, "no atlas variable named " + name);
  }
  // Rebuild the structured view from the flattened one.
  long idx = 0;
  for (int i = 0; i <= atlas.m; ++i)
    for (int j = 0; j < atlas.n; ++j)
      phi.theta[static_cast<size_t>(i)][static_cast<size_t>(j)] = flat[static_cast<size_t>(idx++)];
  for (auto& a : phi.alpha) a = flat[static_cast<size_t>(idx++)];
  for (auto& b : phi.beta) b = flat[static_cast<size_t>(idx++)];
  for (auto& blocks : phi.gamma_fin)
    for (auto& g : blocks)
      for (auto& v : g) v = flat[static_cast<size_t>(idx++)];
  for (auto& g : phi.gamma_inf)
    for (auto& v : g) v = flat[static_cast<size_t>(idx++)];
  phi.delta = flat[static_cast<size_t>(idx++)];
}

template <class K>
CoverReport<K> analyze_input(const io::ParsedCurve<K>& in, const Options& opt, Json* stages) {
  BPoly<K> model_poly;
  if (in.model.has_value()) {
    model_poly = *in.model;
  } else {
    require(in.seed_u.has_value(), Err::InvalidInput,
            "a raw curve needs \"seed_u\" to pick the function with the designated pole");
    int m = in.pole_order.value_or(0);
    if (m == 0) {
      // Derive the pole order from the seed expansion by probing upward.
      bool done = false;
      for (int guess = 1; guess <= 2 * std::max(in.raw_curve->deg_x(), 1) && !done; ++guess) {
        try {
          (void)normalize_at_infinity(*in.raw_curve, guess, *in.seed_u, in.field);
          m = guess;
          done = true;
        } catch (const Error& e) {
          if (e.code() != Err::WrongPoleOrder) throw;
        }
      }
      require(done, Err::WrongPoleOrder, "could not match the seed pole order");
    }
    auto norm = normalize_at_infinity(*in.raw_curve, m, *in.seed_u, in.field);
    auto elim = eliminate(*in.raw_curve, norm.y_expr);
    if (stages) {
      (*stages)["normalization"] = Json{{"pole_order", norm.pole_order},
                                        {"c_lead", io::scalar_json(norm.c_lead)},
                                        {"c_zero", io::scalar_json(norm.c_zero)},
                                        {"y_expr", io::bpoly_json(norm.y_expr)}};
    }
    model_poly = elim.f;
  }
  auto model = make_plane_model(std::move(model_poly), in.field);
  return analyze(model, in.declared, opt.prec);
}

struct VerifyOutcome {
  Json report;
  bool passed = true;
  std::string first_failure;
};

template <class K>
VerifyOutcome run_verify(const io::ParsedCurve<K>& in, const Options& opt) {
  VerifyOutcome out;
  Json rep = Json::object();
  rep["schema"] = 1;
  auto fail_check = [&](const std::string& name) {
    if (out.passed) out.first_failure = name;
    out.passed = false;
  };

  CoverReport<K> cr;
  try {
    cr = analyze_input(in, opt, &rep);
  } catch (const Error& e) {
    rep["analysis_error"] = std::string(e.what());
    fail_check(std::string("analysis: ") + e.what());
    rep["passed"] = false;
    rep["first_failure"] = out.first_failure;
    out.report = std::move(rep);
    return out;
  }
  rep["analysis"] = io::report_json(cr);

  VSystem<K> vs = build_V(cr);
  WSystem<K> ws = build_W(cr);
  rep["vset"] = io::vsystem_json(vs, false);
  PhiVector<K> phi = assemble_phi(cr);
  apply_phi_overrides(vs.atlas, phi, opt.phi_overrides, in.field);
  auto mem = verify_membership(vs, ws, phi);
  rep["membership"] = io::membership_json(mem);
  if (!mem.passed) fail_check(mem.first_failure);

  LogValue h_alpha = declared_height(in.declared);
  AuditReport au = audit(vs, h_alpha);
  rep["audit"] = io::audit_json(au);
  if (!au.degree_ok) fail_check("audit: degree bound");
  if (!au.height_ok) fail_check("audit: height bound");

  auto sys = system_nabla_sigma(vs, static_cast<int>(cr.omega));
  rep["system"] = io::system_kps_json(sys);
  if (!sys.nabla_cap_ok) fail_check("system: nabla cap");
  if (!sys.sigma_cap_ok) fail_check("system: sigma cap");

  auto chk = theorem_check(cr, h_alpha);
  rep["bounds"] = io::check_json(chk);
  if (!chk.passed) fail_check("bounds: height of the model");

  Json budget_checks = Json::array();
  auto add_budget = [&](const char* name, bool ok) {
    budget_checks.push_back(Json{{"name", name}, {"ok", ok}});
    if (!ok) fail_check(std::string("budget: ") + name);
  };
  add_budget("finite_segments", cr.finite_segment_budget_ok);
  add_budget("infinity_kappa", cr.infinity_kappa_budget_ok);
  add_budget("infinity_segments", cr.infinity_segment_budget_ok);
  add_budget("omega", cr.omega_bound_ok);
  add_budget("root_count", cr.root_count_bound_ok);
  add_budget("pole_kappa_identity", cr.pole_kappa_identity_ok);
  rep["budget_checks"] = std::move(budget_checks);

  rep["passed"] = out.passed;
  rep["first_failure"] = out.first_failure;
  out.report = std::move(rep);
  return out;
}

std::string verify_text_summary(const Json& rep) {
  std::string s;
  if (rep.contains("analysis_error")) {
    s += "analysis failed: " + rep["analysis_error"].get<std::string>() + "\n";
    s += "verdict: FAIL\n";
    return s;
  }
  const Json& a = rep["analysis"];
  s += "model: deg_X = " + std::to_string(a["m"].get<long>()) + ", deg_Y = " +
       std::to_string(a["n"].get<long>()) + "\n";
  s += "discriminant roots: " + std::to_string(a["alphas"].size()) + " declared, " +
       std::to_string(a["betas"].size()) + " extra\n";
  s += "omega = " + std::to_string(a["omega"].get<long>()) + "\n";
  s += "equations: " + std::to_string(rep["vset"]["equations"].get<long>()) + " (" +
       std::to_string(rep["vset"]["slots"].get<long>()) + " slots)\n";
  s += std::string("membership: ") + (rep["membership"]["passed"].get<bool>() ? "pass" : "FAIL") + "\n";
  s += std::string("audit: ") +
       (rep["audit"]["degree_ok"].get<bool>() && rep["audit"]["height_ok"].get<bool>() ? "pass" : "FAIL") +
       "\n";
  s += std::string("bounds: ") + (rep["bounds"]["passed"].get<bool>() ? "pass" : "FAIL") + "\n";
  s += std::string("verdict: ") + (rep["passed"].get<bool>() ? "pass" : "FAIL") + "\n";
  if (!rep["passed"].get<bool>()) s += "first failure: " + rep["first_failure"].get<std::string>() + "\n";
  return s;
}

int cmd_analyze(const Options& opt) {
  Json j = load_input(opt.input);
  FieldPtr field = io::parse_field(j);
  Json rep;
  if (field) {
    auto in = io::parse_curve<NFElem>(j, field);
    rep = io::report_json(analyze_input(in, opt, nullptr));
  } else {
    auto in = io::parse_curve<Rat>(j, nullptr);
    rep = io::report_json(analyze_input(in, opt, nullptr));
  }
  write_output(opt, rep.dump(2));
  return 0;
}

template <class K>
Json emit_vset(const io::ParsedCurve<K>& in, const Options& opt) {
  CoverReport<K> cr = analyze_input(in, opt, nullptr);
  VSystem<K> vs = build_V(cr);
  WSystem<K> ws = build_W(cr);
  PhiVector<K> phi = assemble_phi(cr);
  apply_phi_overrides(vs.atlas, phi, opt.phi_overrides, in.field);
  Json out = Json::object();
  out["schema"] = 1;
  out["vset"] = io::vsystem_json(vs, true);
  Json preds = Json::array();
  for (const auto& p : ws.predicates)
    preds.push_back(Json{{"tag", w_tag_name(p.tag)}, {"label", p.label}, {"polynomials", p.polys.size()}});
  out["wset"] = std::move(preds);
  out["phi"] = io::phi_json(phi, vs.atlas);
  out["membership"] = io::membership_json(verify_membership(vs, ws, phi));
  return out;
}

int cmd_vset(const Options& opt) {
  Json j = load_input(opt.input);
  FieldPtr field = io::parse_field(j);
  Json out;
  if (field) {
    out = emit_vset(io::parse_curve<NFElem>(j, field), opt);
  } else {
    out = emit_vset(io::parse_curve<Rat>(j, nullptr), opt);
  }
  bool passed = out["membership"]["passed"].get<bool>();
  if (!opt.emit_path.empty()) {
    std::ofstream os(opt.emit_path, std::ios::binary);
    require(os.good(), Err::InvalidInput, "cannot open " + opt.emit_path);
    os << out.dump(2);
    std::string summary = std::string("equations written to ") + opt.emit_path + "\nmembership: " +
                          (passed ? "pass" : "FAIL") + "\n";
    write_output(opt, summary);
  } else {
    write_output(opt, out.dump(2));
  }
  return passed ? 0 : 1;
}

int cmd_verify(const Options& opt) {
  Json j = load_input(opt.input);
  FieldPtr field = io::parse_field(j);
  VerifyOutcome res;
  if (field) {
    res = run_verify(io::parse_curve<NFElem>(j, field), opt);
  } else {
    res = run_verify(io::parse_curve<Rat>(j, nullptr), opt);
  }
  if (opt.json) {
    write_output(opt, res.report.dump(2));
  } else {
    write_output(opt, verify_text_summary(res.report));
  }
  return res.passed ? 0 : 1;
}

int cmd_bounds(const Options& opt) {
  require(opt.degree >= 2, Err::InvalidInput, "--degree must be at least 2");
  require(opt.genus >= 0, Err::InvalidInput, "--genus must be nonnegative");
  Int lam = lambda_main(opt.genus, opt.degree);
  Int lamp = lambda_prime(opt.genus + 1, opt.degree);
  Rat harg = Rat::from_string(opt.height_arg);
  require(harg.sign() > 0, Err::InvalidInput, "--height must be a positive rational (the log argument)");
  LogValue h = LogValue::log_of(harg);
  LogValue hbound = (h + LogValue::constant(Rat(1))).scaled(Rat(lam));
  LogValue hbound_prime = (h + LogValue::constant(Rat(1))).scaled(Rat(lamp));

  Json out = Json::object();
  out["schema"] = 1;
  out["genus"] = opt.genus;
  out["degree"] = opt.degree;
  out["lambda"] = lam.get_str();
  out["lambda_prime"] = lamp.get_str();
  out["lambda_prime_dominated"] = lambda_prime_dominated(opt.genus + 1, opt.degree);
  out["height"] = Json{{"log_of", harg.to_string()}};
  out["height_bound"] = io::logvalue_json(hbound);
  out["height_bound_prime"] = io::logvalue_json(hbound_prime);
  if (opt.json) {
    write_output(opt, out.dump(2));
  } else {
    std::string s;
    s += "Lambda        = " + lam.get_str() + "\n";
    s += "Lambda'       = " + lamp.get_str() + "\n";
    s += std::string("Lambda' <= Lambda at the same genus: ") +
         (out["lambda_prime_dominated"].get<bool>() ? "yes" : "NO") + "\n";
    s += "h = log " + harg.to_string() + "\n";
    auto iv = out["height_bound"]["interval"];
    s += "log-scale bound Lambda (h+1) in [" + iv[0].get<std::string>() + ", " + iv[1].get<std::string>() + "]\n";
    write_output(opt, s);
  }
  return 0;
}

int cmd_lemma_suite(const Options& opt) {
  require(opt.count >= 1, Err::InvalidInput, "--count must be at least 1");
  SuiteFault fault = SuiteFault::none;
  if (opt.fault == "product-bound") fault = SuiteFault::product_bound_constant;
  else require(opt.fault.empty(), Err::InvalidInput, "unknown fault injection " + opt.fault);
  SuiteReport rep = run_lemma_suites(opt.seed, opt.count, fault);
  Json out = Json::object();
  out["schema"] = 1;
  out["seed"] = opt.seed;
  out["count"] = opt.count;
  Json lemmas = Json::array();
  for (const auto& l : rep.lemmas) {
    Json e = Json{{"name", l.name}, {"checked", l.checked}, {"ok", l.ok}};
    if (!l.ok) e["counterexample"] = l.counterexample;
    lemmas.push_back(std::move(e));
  }
  out["lemmas"] = std::move(lemmas);
  out["passed"] = rep.passed;
  if (opt.json) {
    write_output(opt, out.dump(2));
  } else {
    std::string s;
    for (const auto& l : rep.lemmas) {
      s += l.name + ": " + std::to_string(l.checked) + " checked, " + (l.ok ? "pass" : "FAIL") + "\n";
      if (!l.ok) s += "  counterexample: " + l.counterexample + "\n";
    }
    s += std::string("verdict: ") + (rep.passed ? "pass" : "FAIL") + "\n";
    write_output(opt, s);
  }
  return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of plane covers of the projective line"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) cmd->add_option("input", opt.input, "curve description (JSON)")->required();
    cmd->add_flag("--json", opt.json, "machine-readable output");
    cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
    cmd->add_option("--seed", opt.seed, "seed for randomized steps");
    cmd->add_option("--prec", opt.prec, "series precision request (terms)")->check(CLI::Range(64L, 1L << 20));
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "discriminant, branch and infinity report");
  add_io(analyze_cmd, true);

  CLI::App* vset_cmd = app.add_subcommand("vset", "emit the defining equations and the membership report");
  add_io(vset_cmd, true);
  vset_cmd->add_option("--emit", opt.emit_path, "write the equation system to this file");
  vset_cmd->add_option("--set-phi", opt.phi_overrides, "override an atlas value, e.g. Delta=0")->take_all();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the full pipeline and certify every check");
  add_io(verify_cmd, true);
  verify_cmd->add_option("--set-phi", opt.phi_overrides,
                         "override an atlas value before membership (debugging aid)")
      ->take_all();

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form bounds exactly");
  bounds_cmd->add_option("--genus", opt.genus, "genus of the covering surface")->required();
  bounds_cmd->add_option("--degree", opt.degree, "degree of the covering")->required();
  bounds_cmd->add_option("--height", opt.height_arg, "log-argument of the ramification height (rational)");
  bounds_cmd->add_flag("--json", opt.json, "machine-readable output");
  bounds_cmd->add_option("--out", opt.out, "write output to a file");

  CLI::App* suite_cmd = app.add_subcommand("lemma-suite", "seeded randomized lemma suites");
  suite_cmd->add_option("--seed", opt.seed, "suite seed");
  suite_cmd->add_option("--count", opt.count, "instances per lemma");
  suite_cmd->add_flag("--json", opt.json, "machine-readable output");
  suite_cmd->add_option("--out", opt.out, "write output to a file");
  suite_cmd->add_option("--inject-fault", opt.fault, "self-test of the failure path (product-bound)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("analyze")) return cmd_analyze(opt);
    if (app.got_subcommand("vset")) return cmd_vset(opt);
    if (app.got_subcommand("verify")) return cmd_verify(opt);
    if (app.got_subcommand("bounds")) return cmd_bounds(opt);
    if (app.got_subcommand("lemma-suite")) return cmd_lemma_suite(opt);
  } catch (const Error& e) {
    if (e.code() == Err::InvalidInput || e.code() == Err::Unsupported) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
