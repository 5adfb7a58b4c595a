#include "holobound/cli.hpp"

#include "holobound/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace holobound::cli {

using io::json;

namespace {

// Malformed command lines, config files or JSON arguments.
struct UsageError : std::runtime_error {
  UsageError(std::string code, const std::string& message)
      : std::runtime_error(message), code(std::move(code)) {}
  std::string code;
};

json read_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("usage.bad_json", what + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("usage.unreadable_file", "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON, or "@path" to read it from a file.
json json_arg(const std::string& value, const std::string& what) {
  if (!value.empty() && value.front() == '@') return read_json_text(read_file(value.substr(1)), what);
  return read_json_text(value, what);
}

JordanMode parse_jordan(const json& j) {
  io::require_keys(j, {"mode", "a", "b", "precision", "value"}, "jordan");
  const std::string mode = j.value("mode", "schur");
  if (mode == "schur") return jordan::Schur{};
  if (mode == "weisfeiler") {
    if (!j.contains("a") || !j.contains("b")) {
      domain_error("config.weisfeiler_constants", "weisfeiler mode needs constants a and b");
    }
    jordan::Weisfeiler w{io::decode_rational(j.at("a")), io::decode_rational(j.at("b"))};
    if (j.contains("precision")) w.precision_bits = j.at("precision").get<unsigned>();
    return w;
  }
  if (mode == "explicit") {
    if (!j.contains("value")) domain_error("config.explicit_value", "explicit mode needs a value");
    return jordan::Explicit{io::decode_bigint(j.at("value"))};
  }
  domain_error("config.bad_mode", "unknown Jordan mode '" + mode + "'");
}

}  // namespace

Config parse_config(const json& doc) {
  io::require_keys(doc, {"ambient", "jordan", "caps", "output"}, "config");
  Config cfg;
  if (doc.contains("ambient")) {
    const json& a = doc.at("ambient");
    io::require_keys(a, {"dim", "theta_top", "beta"}, "config.ambient");
    if (a.contains("dim")) cfg.ambient.dim = a.at("dim").get<int>();
    if (a.contains("theta_top")) cfg.ambient.theta_top = io::decode_bigint(a.at("theta_top"));
    if (a.contains("beta")) {
      if (!a.at("beta").is_object()) domain_error("config.beta", "beta must map rank -> value");
      for (const auto& [rank, value] : a.at("beta").items()) {
        cfg.ambient.beta[parse_bigint(rank)] = io::decode_rational(value);
      }
    }
  }
  if (doc.contains("jordan")) cfg.jordan = parse_jordan(doc.at("jordan"));
  if (doc.contains("caps")) {
    const json& c = doc.at("caps");
    io::require_keys(c, {"field_size", "closure_order", "jordan_order"}, "config.caps");
    if (c.contains("field_size")) cfg.caps.field_size = c.at("field_size").get<unsigned>();
    if (c.contains("closure_order")) cfg.caps.closure_order = c.at("closure_order").get<std::size_t>();
    if (c.contains("jordan_order")) cfg.caps.jordan_order = c.at("jordan_order").get<std::size_t>();
    if (cfg.caps.field_size > 256) domain_error("config.caps", "field_size cannot exceed 256");
  }
  if (doc.contains("output")) {
    const std::string fmt = doc.at("output").get<std::string>();
    if (fmt == "json") {
      cfg.output = OutputFormat::json;
    } else if (fmt == "table") {
      cfg.output = OutputFormat::table;
    } else {
      domain_error("config.output", "output must be json or table");
    }
  }
  cfg.ambient.validate();
  return cfg;
}

namespace {

void print(std::ostream& out, const json& result, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    out << result.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : result.items()) {
    out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

void print_error(std::ostream& err, const std::string& kind, const std::string& code,
                 const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"code", code}, {"message", message}}}}.dump() << '\n';
}

struct ChernOpts {
  std::string rank = "1";
  std::string deg = "0";
  std::string c1sq = "0";
  std::string c2 = "0";
  std::string tuple;

  void add(CLI::App* app) {
    app->add_option("--rank", rank, "rank");
    app->add_option("--deg", deg, "c1 . Theta^{d-1}");
    app->add_option("--c1sq", c1sq, "c1^2 . Theta^{d-2}");
    app->add_option("--c2", c2, "c2 . Theta^{d-2}");
    app->add_option("--e", tuple, "rank,deg,c1sq,c2 (overrides the separate flags)");
  }

  ChernData get() const {
    if (!tuple.empty()) return io::parse_chern_tuple(tuple);
    return io::parse_chern_tuple(rank + "," + deg + "," + c1sq + "," + c2);
  }
};

struct AmbientOpts {
  std::optional<int> dim;
  std::optional<std::string> theta_top;
  std::vector<std::string> beta;
  bool assume_beta_zero = false;

  void add(CLI::App* app) {
    app->add_option("--dim", dim, "ambient dimension d");
    app->add_option("--m", theta_top, "Theta^d");
    app->add_option("--beta", beta, "beta constant as RANK=VALUE (repeatable)");
    app->add_flag("--assume-beta-zero", assume_beta_zero, "treat missing beta constants as 0");
  }

  AmbientSpace get(const Config& cfg) const {
    AmbientSpace amb = cfg.ambient;
    if (dim) amb.dim = *dim;
    if (theta_top) amb.theta_top = parse_bigint(*theta_top);
    for (const auto& item : beta) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("usage.bad_beta", "--beta expects RANK=VALUE");
      amb.beta[parse_bigint(item.substr(0, eq))] = parse_rational(item.substr(eq + 1));
    }
    amb.assume_beta_zero = assume_beta_zero;
    amb.validate();
    return amb;
  }
};

struct JordanOpts {
  std::optional<std::string> mode;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> value;
  std::optional<unsigned> precision;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "schur | weisfeiler | explicit");
    app->add_option("--a", a, "Weisfeiler constant a");
    app->add_option("--b", b, "Weisfeiler constant b");
    app->add_option("--value", value, "explicit J value");
    app->add_option("--precision", precision, "Weisfeiler interval precision in bits");
  }

  JordanMode get(const Config& cfg) const {
    if (!mode) return cfg.jordan;
    json j{{"mode", *mode}};
    if (a) j["a"] = *a;
    if (b) j["b"] = *b;
    if (value) j["value"] = *value;
    if (precision) j["precision"] = *precision;
    return parse_jordan(j);
  }
};

struct FieldOpts {
  unsigned p = 2;
  unsigned e = 1;
  std::string modulus;

  void add(CLI::App* app) {
    app->add_option("--p", p, "characteristic")->required();
    app->add_option("--e", e, "extension degree");
    app->add_option("--modulus", modulus, "monic modulus, low degree first, e.g. 1,1,1");
  }

  FieldPtr get(const Caps& caps) const {
    std::optional<std::vector<unsigned>> mod;
    if (!modulus.empty()) {
      mod.emplace();
      std::stringstream ss(modulus);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const BigInt c = parse_bigint(item);
        if (c < 0 || c > 255) domain_error("field.bad_modulus", "modulus coefficient out of range");
        mod->push_back(c.convert_to<unsigned>());
      }
    }
    return FiniteField::make(p, e, mod, caps.field_size);
  }
};

const char* kind_name(ErrorKind k) { return k == ErrorKind::domain ? "domain" : "resource"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Exact bounds for stable bundles and finite holonomy groups", "holobound"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string config_path;
  std::string format;
  app.add_option("--config", config_path, "JSON config file (default: $HOLOBOUND_CONFIG)");
  app.add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

  Config cfg;
  std::function<json()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<json()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  // ---- chern ------------------------------------------------------------
  CLI::App* chern = app.add_subcommand("chern", "truncated Chern-character calculus");
  chern->require_subcommand(1);
  ChernOpts ce;
  std::string ca;
  std::string cb;
  std::optional<std::string> cross;
  unsigned power = 0;

  auto add_binary = [&](CLI::App* sub) {
    sub->add_option("--a", ca, "first summand/factor rank,deg,c1sq,c2 or JSON")->required();
    sub->add_option("--b", cb, "second summand/factor rank,deg,c1sq,c2 or JSON")->required();
    sub->add_option("--cross", cross, "c1(a).c1(b).Theta^{d-2}");
  };
  auto chern_arg = [](const std::string& text) {
    const auto first = text.find_first_not_of(' ');
    if (first != std::string::npos && text[first] == '{') {
      return io::decode_chern(read_json_text(text, "chern"));
    }
    return io::parse_chern_tuple(text);
  };
  auto opt_cross = [&]() -> std::optional<Rational> {
    if (cross) return parse_rational(*cross);
    return std::nullopt;
  };

  add_binary(leaf(chern, "sum", "Whitney sum", [&] {
    return json{{"chern", io::encode(direct_sum(chern_arg(ca), chern_arg(cb), opt_cross()))}};
  }));
  add_binary(leaf(chern, "tensor", "tensor product", [&] {
    return json{{"chern", io::encode(tensor(chern_arg(ca), chern_arg(cb), opt_cross()))}};
  }));
  ce.add(leaf(chern, "dual", "dual bundle", [&] {
    return json{{"chern", io::encode(dual(ce.get()))}};
  }));
  {
    CLI::App* sub = leaf(chern, "sym", "symmetric power", [&] {
      return json{{"chern", io::encode(sym_power(ce.get(), power))}};
    });
    ce.add(sub);
    sub->add_option("--n", power, "power")->required();
  }
  {
    CLI::App* sub = leaf(chern, "wedge", "exterior power", [&] {
      const ChernData w = wedge_power(ce.get(), power);
      return json{{"chern", io::encode(w)}, {"zero_object", w.is_zero_object()}};
    });
    ce.add(sub);
    sub->add_option("--n", power, "power")->required();
  }
  ce.add(leaf(chern, "slope", "deg / rank", [&] { return json{{"slope", io::encode(slope(ce.get()))}}; }));
  ce.add(leaf(chern, "disc", "discriminant 2 r c2 - (r-1) c1^2", [&] {
    return json{{"discriminant", io::encode(discriminant(ce.get()))}};
  }));
  ce.add(leaf(chern, "mu2", "secondary slope c2 / rank (c1 = 0 only)", [&] {
    return json{{"mu2", io::encode(secondary_slope(ce.get()))}};
  }));

  // ---- bounds -----------------------------------------------------------
  CLI::App* bounds = app.add_subcommand("bounds", "effective restriction constants");
  bounds->require_subcommand(1);
  AmbientOpts amb_opts;
  JordanOpts jordan_opts;
  std::optional<std::string> delta;
  unsigned rank_r = 0;
  std::string c_value = "0";
  std::string variant = "as_printed";
  std::string report_input;

  auto index_action = [&] {
    const ChernData e = ce.get();
    const AmbientSpace amb = amb_opts.get(cfg);
    Rational d;
    if (delta) {
      d = parse_rational(*delta);
    } else if (amb.dim == 2) {
      d = discriminant(e);
    } else {
      domain_error("bounds.delta_required", "--delta is required when dim != 2");
    }
    return json{{"index", io::encode(langer_index(e, amb, d))},
                {"sum", io::encode(langer_sum(e.rank, amb, d))},
                {"delta", io::encode(d)}};
  };
  for (const char* name : {"langer", "bogomolov"}) {
    CLI::App* sub = leaf(bounds, name, "restriction (Bogomolov) index k(E)", index_action);
    ce.add(sub);
    amb_opts.add(sub);
    sub->add_option("--delta", delta, "Delta(E).Theta^{d-1}; defaults to the discriminant on surfaces");
  }
  {
    CLI::App* sub = leaf(bounds, "jordan", "Jordan constant J(r)", [&] {
      return json{{"J", io::encode(jordan_constant(rank_r, jordan_opts.get(cfg)))}};
    });
    sub->add_option("--r", rank_r, "rank")->required();
    jordan_opts.add(sub);
  }
  {
    CLI::App* sub = leaf(bounds, "ell", "effective bound l(r, c)", [&] {
      const EllVariant v = variant == "normalized" ? EllVariant::normalized : EllVariant::as_printed;
      const EllBound b = ell_bound(rank_r, parse_rational(c_value), amb_opts.get(cfg),
                                   jordan_opts.get(cfg), v);
      return json{{"ell", io::encode(b.value)}, {"J", io::encode(b.jordan)},
                  {"t", io::encode(b.sym_rank)}, {"delta", io::encode(b.delta)},
                  {"sum", io::encode(b.sum)},    {"variant", variant}};
    });
    sub->add_option("--r", rank_r, "rank bound r")->required();
    sub->add_option("--c", c_value, "c2 bound c");
    sub->add_option("--variant", variant, "as_printed | normalized")
        ->check(CLI::IsMember({"as_printed", "normalized"}));
    amb_opts.add(sub);
    jordan_opts.add(sub);
  }
  {
    CLI::App* sub = leaf(bounds, "report", "indices of stable summands of End(E) and Sym^J(E)", [&] {
      const json doc = json_arg(report_input, "report input");
      io::require_keys(doc, {"chern", "end", "sym"}, "report");
      if (!doc.contains("chern")) domain_error("json.bad_value", "report: missing chern");
      auto summands = [&](const char* key) {
        std::vector<Summand> list;
        if (!doc.contains(key)) return list;
        for (const auto& item : doc.at(key)) {
          if (item.is_object() && item.contains("chern")) {
            io::require_keys(item, {"chern", "delta"}, std::string("report.") + key);
            Summand s{io::decode_chern(item.at("chern")), std::nullopt};
            if (item.contains("delta")) s.delta_pairing = io::decode_rational(item.at("delta"));
            list.push_back(s);
          } else {
            list.push_back({io::decode_chern(item), std::nullopt});
          }
        }
        return list;
      };
      return io::encode(restriction_report(io::decode_chern(doc.at("chern")), summands("end"),
                                           summands("sym"), amb_opts.get(cfg), jordan_opts.get(cfg)));
    });
    sub->add_option("--input", report_input, "report JSON (inline or @file)")->required();
    amb_opts.add(sub);
    jordan_opts.add(sub);
  }

  // ---- hn ---------------------------------------------------------------
  CLI::App* hn = app.add_subcommand("hn", "Harder-Narasimhan slope predicates");
  hn->require_subcommand(1);
  std::string profile_text;
  std::string w_slope = "0";
  std::string cover_degree = "1";
  bool inseparable = false;
  std::string frob_deg = "0";
  std::string frob_p = "2";
  unsigned frob_n = 0;
  auto profile = [&] { return io::decode_profile(json_arg(profile_text, "profile")); };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--profile", profile_text, "[[rank,\"deg\"],...] inline or @file")->required();
  };

  add_profile(leaf(hn, "validate", "strictly decreasing slopes?", [&] {
    const auto v = validate_profile(profile());
    return json{{"valid", v.valid},
                {"first_violation", v.first_violation ? json(*v.first_violation) : json(nullptr)}};
  }));
  add_profile(leaf(hn, "mumax", "maximal and total slope", [&] {
    const HNProfile p = profile();
    return json{{"mu_max", io::encode(mu_max(p))}, {"total_slope", io::encode(total_slope(p))}};
  }));
  {
    CLI::App* sub = leaf(hn, "pushforward", "mu_max(f_* W) <= mu(W) / deg f", [&] {
      const Rational w = parse_rational(w_slope);
      const CoverData f{parse_bigint(cover_degree), !inseparable};
      const bool ok = pushforward_bound_check(w, f, profile());
      return json{{"admissible", ok}, {"bound", io::encode(w / Rational(f.degree))}};
    });
    add_profile(sub);
    sub->add_option("--w-slope", w_slope, "slope of W");
    sub->add_option("--cover-degree", cover_degree, "degree of f");
    sub->add_flag("--inseparable", inseparable, "the cover is inseparable");
  }
  add_profile(leaf(hn, "etale", "etale criterion on HN data of f_* O_X", [&] {
    return json{{"verdict", to_string(etale_criterion(profile()))}};
  }));
  add_profile(leaf(hn, "genram", "genuinely ramified criterion on HN data of f_* O_X", [&] {
    return json{{"verdict", to_string(genuinely_ramified_criterion(profile()))}};
  }));
  {
    CLI::App* sub = leaf(hn, "frobscale", "degree after n Frobenius pullbacks", [&] {
      return json{{"deg", io::encode(frobenius_degree_scale(parse_rational(frob_deg),
                                                            parse_bigint(frob_p), frob_n))}};
    });
    sub->add_option("--deg", frob_deg, "degree");
    sub->add_option("--p", frob_p, "characteristic")->required();
    sub->add_option("--n", frob_n, "number of Frobenius pullbacks");
  }

  // ---- serre ------------------------------------------------------------
  CLI::App* serre = app.add_subcommand("serre", "Serre-construction planning on P^2");
  serre->require_subcommand(1);
  std::string m_degree = "0";
  std::string curve_degree = "1";
  std::string floor_value = "0";
  std::string plan_text;
  auto plan_json = [&](const SerrePlan& p, const PlaneLineBundle& m) {
    json out = io::encode(p);
    json conditions = json::array();
    const auto checks = check_assumptions(p, m);
    for (const auto& c : checks) conditions.push_back({{"condition", c.condition}, {"holds", c.holds}});
    out["conditions"] = conditions;
    out["label"] = "certified sufficient bound on c2 (not an optimal alpha)";
    if (p.stability_floor == 0) {
      out["warnings"] = json::array({"no stability floor supplied; stability of the Serre "
                                     "extension is not certified by counting alone"});
    }
    return out;
  };
  {
    CLI::App* sub = leaf(serre, "plan", "minimal Q, l(Z) and c2 bound for M = O(m)", [&] {
      const PlaneLineBundle m{parse_bigint(m_degree)};
      return plan_json(plan(m, parse_bigint(floor_value)), m);
    });
    sub->add_option("--m-degree", m_degree, "degree of M");
    sub->add_option("--floor", floor_value, "extra stability floor on c2");
  }
  {
    CLI::App* sub = leaf(serre, "alpha-curve", "plan for M = O(C) + K on P^2", [&] {
      const BigInt d = parse_bigint(curve_degree);
      const SerrePlan p = alpha_of_curve(d, parse_bigint(floor_value));
      return plan_json(p, PlaneLineBundle{p.m_degree});
    });
    sub->add_option("--curve-degree", curve_degree, "degree of the plane curve")->required();
    sub->add_option("--floor", floor_value, "extra stability floor on c2");
  }
  {
    CLI::App* sub = leaf(serre, "check", "re-verify the counting conditions of a plan", [&] {
      const SerrePlan p = io::decode_plan(json_arg(plan_text, "plan"));
      const PlaneLineBundle m{parse_bigint(m_degree)};
      const auto checks = check_assumptions(p, m);
      json conditions = json::array();
      for (const auto& c : checks) conditions.push_back({{"condition", c.condition}, {"holds", c.holds}});
      return json{{"conditions", conditions}, {"all_hold", all_hold(checks)}};
    });
    sub->add_option("--plan", plan_text, "plan JSON inline or @file")->required();
    sub->add_option("--m-degree", m_degree, "degree of M")->required();
  }

  // ---- hol --------------------------------------------------------------
  CLI::App* hol = app.add_subcommand("hol", "finite holonomy groups over F_q");
  hol->require_subcommand(1);
  FieldOpts field_opts;
  std::string gens_text;
  std::string target;
  std::string functor_name;
  unsigned functor_n = 1;
  std::string other_text;
  std::string group_name;
  std::string table_path;
  std::optional<unsigned> jv_r;
  std::optional<std::string> jv_j;
  bool elementary_only = false;

  {
    CLI::App* sub = leaf(hol, "field", "construct F_q", [&] {
      const FieldPtr f = field_opts.get(cfg.caps);
      return json{{"p", f->characteristic()}, {"e", f->degree()},
                  {"q", std::to_string(f->size())}, {"modulus", f->modulus()}};
    });
    field_opts.add(sub);
  }
  {
    CLI::App* sub = leaf(hol, "sl2", "SL(2, F_q) from elementary matrices", [&] {
      const FieldPtr f = field_opts.get(cfg.caps);
      return io::encode(elementary_only ? elementary_closure(f, cfg.caps.closure_order)
                                        : sl2_generate(f, cfg.caps.closure_order));
    });
    field_opts.add(sub);
    sub->add_flag("--elementary", elementary_only,
                  "close only [[1,1],[0,1]] and [[1,0],[1,1]] (gives SL(2, F_p))");
  }
  auto add_gens = [&](CLI::App* sub) {
    field_opts.add(sub);
    sub->add_option("--gens", gens_text, "array of matrices, inline or @file")->required();
  };
  auto rep_from = [&](const FieldPtr& f, const std::string& text) {
    FreeGroupRep rep{f, 0, io::decode_matrices(*f, json_arg(text, "generators"))};
    if (rep.images.empty()) domain_error("rep.no_generators", "at least one generator is required");
    rep.dim = rep.images.front().dim;
    rep.validate();
    return rep;
  };
  add_gens(leaf(hol, "irreducible", "Burnside span test", [&] {
    const FreeGroupRep rep = rep_from(field_opts.get(cfg.caps), gens_text);
    const BurnsideResult b = burnside_irreducible(*rep.field, rep.dim, rep.images);
    return json{{"span_dim", std::to_string(b.span_dim)},
                {"full_dim", std::to_string(b.full_dim)},
                {"irreducible", b.irreducible}};
  }));
  {
    CLI::App* sub = leaf(hol, "holonomy", "image of a free-group representation", [&] {
      const FreeGroupRep rep = rep_from(field_opts.get(cfg.caps), gens_text);
      std::optional<MatrixGroup> tgt;
      if (target == "sl2") {
        if (rep.dim != 2) domain_error("rep.dim_mismatch", "sl2 target needs a 2-dim representation");
        tgt = sl2_generate(rep.field, cfg.caps.closure_order);
      } else if (!target.empty()) {
        throw UsageError("usage.bad_target", "--target supports only 'sl2'");
      }
      const HolonomyResult h = holonomy(rep, tgt ? &*tgt : nullptr, cfg.caps.closure_order);
      json out = io::encode(h.group);
      if (h.full) out["full_holonomy"] = *h.full;
      const BurnsideResult b = burnside_irreducible(*rep.field, rep.dim, rep.images);
      out["irreducible"] = b.irreducible;
      return out;
    });
    add_gens(sub);
    sub->add_option("--target", target, "target group for the full-holonomy flag (sl2)");
  }
  {
    CLI::App* sub = leaf(hol, "assoc", "apply tensor/dual/sym/wedge generator-wise", [&] {
      const FieldPtr f = field_opts.get(cfg.caps);
      const FreeGroupRep rep = rep_from(f, gens_text);
      RepFunctor fn;
      if (functor_name == "dual") {
        fn = functor::Dual{};
      } else if (functor_name == "sym") {
        fn = functor::Sym{functor_n};
      } else if (functor_name == "wedge") {
        fn = functor::Wedge{functor_n};
      } else if (functor_name == "tensor") {
        if (other_text.empty()) throw UsageError("usage.missing_other", "tensor needs --other");
        fn = functor::TensorWith{rep_from(f, other_text)};
      } else {
        throw UsageError("usage.bad_functor", "functor must be dual, sym, wedge or tensor");
      }
      const FreeGroupRep out = associated_rep(rep, fn);
      json images = json::array();
      for (const auto& m : out.images) images.push_back(io::encode(*f, m));
      const BurnsideResult b = burnside_irreducible(*f, out.dim, out.images);
      return json{{"dim", std::to_string(out.dim)}, {"images", images},
                  {"irreducible", b.irreducible}, {"span_dim", std::to_string(b.span_dim)}};
    });
    add_gens(sub);
    sub->add_option("--functor", functor_name, "dual | sym | wedge | tensor")->required();
    sub->add_option("--n", functor_n, "power for sym / wedge");
    sub->add_option("--other", other_text, "second representation for tensor");
  }
  {
    CLI::App* sub = leaf(hol, "jordan-verify", "abelian normal subgroup of minimal index", [&] {
      std::optional<FiniteGroupTable> table;
      unsigned r = 0;
      if (!group_name.empty()) {
        table = named_group(group_name);
        r = natural_dimension(group_name);
      } else if (!table_path.empty()) {
        table = io::decode_table(json_arg(table_path, "group table"));
      } else if (!gens_text.empty()) {
        const FreeGroupRep rep = rep_from(field_opts.get(cfg.caps), gens_text);
        table = table_from_matrix_group(generate_group(rep.field, rep.dim, rep.images,
                                                       cfg.caps.closure_order));
        r = rep.dim;
      } else {
        throw UsageError("usage.no_group", "give --group, --table or --p/--gens");
      }
      if (jv_r) r = *jv_r;
      if (r == 0) throw UsageError("usage.missing_r", "--r is required for table input");
      const BigInt j = jv_j ? parse_bigint(*jv_j) : jordan_constant(r, jordan_opts.get(cfg));
      return io::encode(jordan_verify(*table, r, j, cfg.caps.jordan_order), *table);
    });
    sub->add_option("--group", group_name, "s3 | d4 | q8 | a4 | s4 | sl2:p:e");
    sub->add_option("--table", table_path, "group table JSON, inline or @file");
    sub->add_option("--p", field_opts.p, "characteristic (matrix input)");
    sub->add_option("--e", field_opts.e, "extension degree (matrix input)");
    sub->add_option("--modulus", field_opts.modulus, "modulus (matrix input)");
    sub->add_option("--gens", gens_text, "matrix generators (matrix input)");
    sub->add_option("--r", jv_r, "dimension r of the ambient GL_r");
    sub->add_option("--j", jv_j, "bound J to test against (default: J(r) in the configured mode)");
    jordan_opts.add(sub);
  }

  leaf(&app, "selftest", "run the acceptance suite", [&]() -> json { return nullptr; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", "usage.parse", e.what());
    return kUsageError;
  }

  try {
    const std::optional<std::string> path =
        !config_path.empty() ? std::optional(config_path) : env.config_env;
    if (path && !path->empty()) cfg = parse_config(read_json_text(read_file(*path), "config"));
    if (format == "table") cfg.output = OutputFormat::table;
    if (format == "json") cfg.output = OutputFormat::json;

    if (app.got_subcommand("selftest")) {
      if (!env.selftest) {
        print_error(err, "usage", "usage.selftest_unavailable", "built without the acceptance suite");
        return kUsageError;
      }
      return env.selftest(out);
    }
    if (!action) throw UsageError("usage.no_command", "no command given");
    print(out, action(), cfg.output);
    return kOk;
  } catch (const UsageError& e) {
    print_error(err, "usage", e.code, e.what());
    return kUsageError;
  } catch (const Error& e) {
    print_error(err, kind_name(e.kind()), e.code(), e.what());
    return e.kind() == ErrorKind::domain ? kDomainError : kResourceError;
  } catch (const json::exception& e) {
    print_error(err, "usage", "usage.bad_json", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    print_error(err, "domain", "internal", e.what());
    return kDomainError;
  }
}

}  // namespace holobound::cli
