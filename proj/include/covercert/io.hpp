#ifndef COVERCERT_IO_HPP
#define COVERCERT_IO_HPP

// JSON input/output. All scalars are exact strings ("p/q" for rationals,
// coordinate arrays for field elements); interval endpoints are dyadic
// strings. Serialization uses ordered maps and never emits floats, so output
// is byte-identical across runs.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "covercert/bounds.hpp"
#include "covercert/cover.hpp"
#include "covercert/error.hpp"
#include "covercert/vset.hpp"

namespace covercert::io {

using Json = nlohmann::ordered_json;

// ---- scalars ---------------------------------------------------------------

inline Json scalar_json(const Rat& a) { return a.to_string(); }
inline Json scalar_json(const NFElem& a) {
  if (a.is_rational()) return a.rat_part().to_string();
  Json arr = Json::array();
  for (const auto& c : a.coords()) arr.push_back(c.to_string());
  return arr;
}

inline Rat rat_from_json(const Json& j) {
  require(j.is_string() || j.is_number_integer(), Err::InvalidInput, "expected an exact scalar string");
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  return Rat::from_string(j.get<std::string>());
}

inline Rat parse_scalar(const Json& j, const FieldPtr&, Rat*) {
  require(!j.is_array(), Err::InvalidInput, "field-element coordinates given but no field is declared");
  return rat_from_json(j);
}
inline NFElem parse_scalar(const Json& j, const FieldPtr& field, NFElem*) {
  if (j.is_array()) {
    require(field != nullptr, Err::InvalidInput, "coordinate array requires a declared field");
    std::vector<Rat> coords;
    for (const auto& c : j) coords.push_back(rat_from_json(c));
    return NFElem(field, std::move(coords));
  }
  return NFElem(rat_from_json(j));
}

// ---- polynomial matrices ---------------------------------------------------

// Coefficient matrix with rows indexed by the X power and columns by the Y
// power: f = sum c[i][j] X^i Y^j.
template <class K>
Json bpoly_json(const BPoly<K>& f) {
  Json rows = Json::array();
  int dx = std::max(f.deg_x(), 0), dy = std::max(f.deg_y(), 0);
  for (int i = 0; i <= dx; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= dy; ++j) row.push_back(scalar_json(f.coeff(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class K>
BPoly<K> bpoly_from_json(const Json& j, const FieldPtr& field) {
  require(j.is_array() && !j.empty(), Err::InvalidInput, "polynomial must be a coefficient matrix");
  std::vector<std::vector<K>> rows;
  for (const auto& r : j) {
    require(r.is_array(), Err::InvalidInput, "polynomial rows must be arrays");
    std::vector<K> row;
    for (const auto& c : r) row.push_back(parse_scalar(c, field, static_cast<K*>(nullptr)));
    rows.push_back(std::move(row));
  }
  return BPoly<K>::from_matrix(rows);
}

template <class K>
Json upoly_json(const UPoly<K>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(scalar_json(c));
  return arr;
}

// ---- seed expressions --------------------------------------------------------

// Tiny expression grammar over (x, y0) with exact rational literals:
//   expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
//   factor := ('-')* atom ('^' integer)? ; atom := number | x | y0 | '(' expr ')'
// Division is restricted to constant divisors.
template <class K>
class ExprParser {
 public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  BPoly<K> parse() {
    BPoly<K> v = expr();
    skip_ws();
    require(pos_ == s_.size(), Err::InvalidInput, "trailing input in expression: '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  static BPoly<K> constant(const K& c) {
    return BPoly<K>(std::vector<UPoly<K>>{UPoly<K>::constant(c)});
  }
  static BPoly<K> xvar() { return BPoly<K>(std::vector<UPoly<K>>{UPoly<K>::x()}); }
  static BPoly<K> yvar() {
    return BPoly<K>(std::vector<UPoly<K>>{UPoly<K>(), UPoly<K>::constant(K(1))});
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  BPoly<K> expr() {
    BPoly<K> v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  BPoly<K> term() {
    BPoly<K> v = factor();
    while (true) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        BPoly<K> d = factor();
        require(d.deg_x() <= 0 && d.deg_y() <= 0 && !d.is_zero(), Err::InvalidInput,
                "division is only defined by nonzero constants");
        v = v.scaled(inv(d.coeff(0, 0)));
      } else {
        return v;
      }
    }
  }
  BPoly<K> factor() {
    if (eat('-')) return -factor();
    BPoly<K> v = atom();
    if (eat('^')) {
      std::string digits = read_digits();
      require(!digits.empty(), Err::InvalidInput, "exponent expected after '^'");
      long e = std::stol(digits);
      BPoly<K> r = constant(K(1));
      for (long i = 0; i < e; ++i) r = r * v;
      return r;
    }
    return v;
  }
  BPoly<K> atom() {
    skip_ws();
    if (eat('(')) {
      BPoly<K> v = expr();
      require(eat(')'), Err::InvalidInput, "missing ')'");
      return v;
    }
    char c = peek();
    if (c == 'x') {
      ++pos_;
      return xvar();
    }
    if (c == 'y') {
      ++pos_;
      require(pos_ < s_.size() && s_[pos_] == '0', Err::InvalidInput, "unknown variable; use x and y0");
      ++pos_;
      return yvar();
    }
    std::string digits = read_digits();
    require(!digits.empty(), Err::InvalidInput, std::string("unexpected character '") + c + "' in expression");
    if (eat('/')) {
      std::string den = read_digits();
      require(!den.empty(), Err::InvalidInput, "denominator expected");
      return constant(K(Rat(Int(digits), Int(den))));
    }
    return constant(K(Rat(Int(digits))));
  }
  std::string read_digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') out += s_[pos_++];
    return out;
  }

  std::string s_;
  size_t pos_ = 0;
};

// ---- curve input -------------------------------------------------------------

template <class K>
struct ParsedCurve {
  FieldPtr field;
  std::optional<BPoly<K>> raw_curve;  // "F0"
  std::optional<BPoly<K>> model;      // "f"
  std::optional<BPoly<K>> seed_u;
  std::optional<int> pole_order;
  std::vector<K> declared;
  std::vector<K> bad_xs;
};

inline FieldPtr parse_field(const Json& j) {
  if (!j.contains("field") || j["field"].is_null()) return nullptr;
  const Json& fj = j["field"];
  require(fj.is_object() && fj.contains("minpoly"), Err::InvalidInput,
          "field descriptor must carry a minpoly coefficient list");
  std::vector<Rat> c;
  for (const auto& a : fj["minpoly"]) c.push_back(rat_from_json(a));
  return NumberField::make(UPoly<Rat>(std::move(c)));
}

template <class K>
ParsedCurve<K> parse_curve(const Json& j, FieldPtr field) {
  ParsedCurve<K> in;
  in.field = std::move(field);
  if (j.contains("F0")) in.raw_curve = bpoly_from_json<K>(j["F0"], in.field);
  if (j.contains("f")) in.model = bpoly_from_json<K>(j["f"], in.field);
  require(in.raw_curve.has_value() || in.model.has_value(), Err::InvalidInput,
          "input needs either \"F0\" (raw curve) or \"f\" (plane model)");
  if (j.contains("seed_u")) {
    const Json& u = j["seed_u"];
    if (u.is_string()) {
      in.seed_u = ExprParser<K>(u.get<std::string>()).parse();
    } else {
      in.seed_u = bpoly_from_json<K>(u, in.field);
    }
  }
  if (j.contains("pole_order")) in.pole_order = j["pole_order"].get<int>();
  if (j.contains("declared_branch_points"))
    for (const auto& a : j["declared_branch_points"])
      in.declared.push_back(parse_scalar(a, in.field, static_cast<K*>(nullptr)));
  if (j.contains("bad_xs"))
    for (const auto& a : j["bad_xs"]) in.bad_xs.push_back(parse_scalar(a, in.field, static_cast<K*>(nullptr)));
  return in;
}

// ---- report serialization ------------------------------------------------------

inline Json logvalue_json(const LogValue& v, long bits = 64) {
  Json out = Json::object();
  if (v.is_exact()) {
    if (auto arg = v.single_log_argument()) {
      out["log_of"] = arg->to_string();
      return out;
    }
  }
  RatInterval e = v.enclosure(bits);
  out["interval"] = Json::array({dyadic_floor(e.lo, bits + 8).to_string(), dyadic_ceil(e.hi, bits + 8).to_string()});
  return out;
}

template <class K>
Json series_json(const Series<K>& s) {
  Json out = Json::object();
  out["offset"] = s.window_empty() ? 0 : s.offset();
  Json coeffs = Json::array();
  for (long e = s.offset(); e < s.window_end(); ++e) coeffs.push_back(scalar_json(s.coeff(e)));
  out["coeffs"] = std::move(coeffs);
  if (s.is_exact()) out["prec"] = "exact";
  else out["prec"] = s.prec();
  return out;
}

inline Json field_json(const FieldPtr& f) {
  if (!f) return nullptr;
  Json out = Json::object();
  Json mp = Json::array();
  for (const auto& c : f->minpoly().coeffs()) mp.push_back(c.to_string());
  out["minpoly"] = std::move(mp);
  out["degree"] = f->degree();
  out["irreducibility"] = f->status() == NumberField::Irreducibility::proved ? "proved" : "asserted";
  return out;
}

template <class K>
Json report_json(const CoverReport<K>& rep) {
  Json out = Json::object();
  out["m"] = rep.model.m;
  out["n"] = rep.model.n;
  out["field"] = field_json(rep.model.field);
  out["f"] = bpoly_json(rep.model.f);
  out["discriminant"] = upoly_json(rep.disc);
  out["delta"] = scalar_json(rep.delta);
  Json alphas = Json::array();
  for (const auto& [a, s] : rep.alphas) alphas.push_back(Json{{"value", scalar_json(a)}, {"sigma", s}});
  out["alphas"] = std::move(alphas);
  Json betas = Json::array();
  for (const auto& tab : rep.betas) {
    Json bt = Json::object();
    bt["value"] = scalar_json(tab.beta);
    bt["tau"] = tab.tau;
    bt["ell"] = tab.ell;
    Json branches = Json::array();
    for (const auto& b : tab.branches) {
      branches.push_back(Json{{"kappa", b.kappa}, {"segment", series_json(b.segment)}});
    }
    bt["branches"] = std::move(branches);
    Json lam = Json::array();
    for (const auto& l : tab.lambda) lam.push_back(Json::array({l[0], l[1], l[2]}));
    bt["lambda"] = std::move(lam);
    betas.push_back(std::move(bt));
  }
  out["betas"] = std::move(betas);
  Json inf = Json::object();
  Json ibr = Json::array();
  for (const auto& b : rep.infinity.branches)
    ibr.push_back(Json{{"kappa", b.kappa}, {"segment", series_json(b.segment)}});
  inf["branches"] = std::move(ibr);
  inf["c_lead"] = scalar_json(rep.infinity.c_lead);
  inf["c_zero"] = scalar_json(rep.infinity.c_zero);
  inf["normalized"] = rep.infinity.normalized;
  inf["pole_kappa_via_g"] = rep.infinity.kappa1_via_g;
  // The pole kappa decomposes as m(n-1) + ord g_Y along the pole branch;
  // the observed delta is recorded for the audit.
  inf["pole_kappa_chain_delta"] = rep.infinity.pole_kappa_chain_delta;
  Json laminf = Json::array();
  for (const auto& l : rep.lambda_inf) laminf.push_back(Json::array({l[0], l[1], l[2]}));
  inf["lambda"] = std::move(laminf);
  out["infinity"] = std::move(inf);
  out["omega"] = rep.omega;
  out["budgets"] = Json{{"finite_segments", rep.finite_segment_budget_ok},
                        {"infinity_kappa", rep.infinity_kappa_budget_ok},
                        {"infinity_segments", rep.infinity_segment_budget_ok},
                        {"omega", rep.omega_bound_ok},
                        {"root_count", rep.root_count_bound_ok},
                        {"pole_kappa_identity", rep.pole_kappa_identity_ok}};
  return out;
}

template <class K>
Json phi_json(const PhiVector<K>& phi, const VarAtlas& atlas) {
  Json out = Json::object();
  out["omega"] = phi.omega;
  Json vals = Json::object();
  std::vector<K> flat = flatten_phi(atlas, phi);
  for (long i = 0; i < atlas.omega; ++i)
    vals[atlas.names[static_cast<size_t>(i)]] = scalar_json(flat[static_cast<size_t>(i)]);
  out["values"] = std::move(vals);
  return out;
}

template <class K>
Json vsystem_json(const VSystem<K>& vs, bool include_equations) {
  Json out = Json::object();
  out["omega"] = vs.atlas.omega;
  out["variables"] = vs.atlas.names;
  out["equations"] = static_cast<long>(vs.equations.size());
  out["slots"] = vs.slots;
  Json tags = Json::object();
  for (const auto& [tag, count] : vs.slots_by_tag) tags[tag] = count;
  out["slots_by_tag"] = std::move(tags);
  if (include_equations) {
    Json eqs = Json::array();
    for (const auto& eq : vs.equations) {
      Json e = Json::object();
      e["tag"] = eq_tag_name(eq.tag);
      e["label"] = eq.label;
      e["degree"] = eq.poly.total_degree();
      Json monomials = Json::array();
      for (const auto& [exps, coef] : eq.poly.terms()) {
        Json mono = Json::object();
        mono["coef"] = scalar_json(coef);
        Json vars = Json::object();
        for (size_t i = 0; i < exps.size(); ++i) {
          if (exps[i] == 0) continue;
          require(i < static_cast<size_t>(vs.atlas.omega), Err::Internal, "auxiliary variable in equation");
          vars[vs.atlas.names[i]] = exps[i];
        }
        mono["vars"] = std::move(vars);
        monomials.push_back(std::move(mono));
      }
      e["monomials"] = std::move(monomials);
      eqs.push_back(std::move(e));
    }
    out["list"] = std::move(eqs);
  }
  return out;
}

inline Json membership_json(const MembershipReport& mem) {
  Json out = Json::object();
  out["passed"] = mem.passed;
  out["first_failure"] = mem.first_failure;
  Json v = Json::array();
  for (const auto& r : mem.v_results) {
    Json e = Json{{"label", r.label}, {"ok", r.ok}};
    if (!r.ok) e["value"] = r.value;
    v.push_back(std::move(e));
  }
  out["v"] = std::move(v);
  Json w = Json::array();
  for (const auto& r : mem.w_results) {
    Json e = Json{{"label", r.label}, {"ok", r.ok}};
    if (!r.ok) e["note"] = r.value;
    w.push_back(std::move(e));
  }
  out["w"] = std::move(w);
  return out;
}

inline Json audit_json(const AuditReport& au) {
  return Json{{"equation_count", au.equation_count},
              {"slot_count", au.slot_count},
              {"max_degree", au.max_degree},
              {"degree_bound", au.degree_bound},
              {"degree_ok", au.degree_ok},
              {"degree_argmax", au.degree_argmax},
              {"max_height", logvalue_json(au.max_height)},
              {"height_bound", logvalue_json(au.height_bound)},
              {"height_ok", au.height_ok},
              {"height_argmax", au.height_argmax}};
}

inline Json check_json(const CheckReport& chk) {
  return Json{{"degx_ok", chk.degx_ok},
              {"degy_ok", chk.degy_ok},
              {"h_f", logvalue_json(chk.h_f)},
              {"lambda", chk.lambda.get_str()},
              {"lambda_prime", chk.lambda_prime.get_str()},
              {"within_lambda_prime", chk.within_lambda_prime},
              {"within_lambda", chk.within_lambda},
              {"passed", chk.passed}};
}

inline Json system_kps_json(const SystemKPS& sys) {
  Json degrees = Json::array();
  for (long d : sys.degrees) degrees.push_back(d);
  return Json{{"degrees", std::move(degrees)},
              {"nabla", sys.nabla.get_str()},
              {"sigma", sys.sigma.to_string()},
              {"nabla_cap", sys.nabla_cap.get_str()},
              {"nabla_cap_ok", sys.nabla_cap_ok},
              {"sigma_cap_ok", sys.sigma_cap_ok},
              {"height_bound", logvalue_json(sys.kps.height_bound)},
              {"disc_bound", logvalue_json(sys.kps.disc_bound)}};
}

}  // namespace covercert::io

#endif
