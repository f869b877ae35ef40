#include "vcalc/cli.hpp"

#include <json.hpp>

#include <cmath>
#include <optional>
#include <sstream>

#include "vcalc/calculus.hpp"
#include "vcalc/classify.hpp"
#include "vcalc/errors.hpp"
#include "vcalc/integrate.hpp"
#include "vcalc/magnitude.hpp"
#include "vcalc/props.hpp"

namespace vc::cli {

namespace {

using nlohmann::json;

struct Options {
  Settings settings;
  bool json_out = false;
  std::optional<std::string> at_value;
  int instances = 200;
  std::string verb;
  std::vector<std::string> positional;
};

struct UsageError : Error {
  using Error::Error;
};

Options parse_args(const std::vector<std::string>& args) {
  Options o;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto need_value = [&](const char* flag) -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError(std::string(flag) + " needs a value");
      return args[++i];
    };
    if (a == "--json") {
      o.json_out = true;
    } else if (a == "--trunc") {
      o.settings.trunc = std::stoi(need_value("--trunc"));
    } else if (a == "--depth") {
      o.settings.depth = std::stoi(need_value("--depth"));
    } else if (a == "--tol") {
      o.settings.tol = std::stod(need_value("--tol"));
    } else if (a == "--seed") {
      o.settings.seed = std::stoull(need_value("--seed"));
    } else if (a == "--at") {
      o.at_value = need_value("--at");
    } else if (a == "--instances") {
      o.instances = std::stoi(need_value("--instances"));
    } else if (a.rfind("--", 0) == 0) {
      // "-..." stays positional: expressions may begin with a minus
      throw UsageError("unknown flag: " + a);
    } else if (o.verb.empty()) {
      o.verb = a;
    } else {
      o.positional.push_back(a);
    }
  }
  if (o.verb.empty()) throw UsageError("no command given");
  return o;
}

Scalar parse_scalar_arg(const std::string& text) {
  std::string t = text;
  bool neg = false;
  if (!t.empty() && t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  auto r = Rational::from_string(t);
  if (!r) throw UsageError("expected a number, got '" + text + "'");
  return neg ? Scalar(-*r) : Scalar(*r);
}

double parse_double_arg(const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw UsageError("expected a number, got '" + text + "'");
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + text + "'");
  }
}

std::string fmt(double v) { return Scalar::approx(v).to_string(); }

json verdict_json(const Verdict& v) {
  json j;
  j["verdict"] = to_string(v);
  j["depth"] = v.depth;
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

std::string verdict_text(const Verdict& v) {
  if (v.is_unknown()) return "UnknownAtDepth(" + std::to_string(v.depth) + ")";
  return to_string(v);
}

int verdict_exit(const Verdict& v) { return v.is_fails() ? 1 : 0; }

struct Outcome {
  json payload;
  std::vector<std::string> lines;
  int exit_code = 0;
};

std::string classification_text(const FinitudeReport& fr, const RealComparisonReport& cr) {
  if (!fr.tag) return "unclassified at this depth";
  switch (*fr.tag) {
    case FinitudeTag::Infinitesimal: return "infinitesimal; finite";
    case FinitudeTag::FiniteNonInfinitesimal: return "finite; not infinitesimal";
    case FinitudeTag::InfiniteAboveR: return "infinite; > R";
    case FinitudeTag::InfiniteBelowR: return "infinite; < R";
    default:
      return cr.cmp == RealComparison::Neither ? "infinite; not > R; not < R"
                                               : "infinite";
  }
}

Outcome do_eval(const Options& o) {
  if (o.positional.size() != 1) throw UsageError("eval EXPR");
  VirtualNumber v = parse_virtual(o.positional[0], o.settings);
  Outcome r;
  std::string form = v.is_series() ? normal_form(v) : v.describe();
  r.payload["normalForm"] = form;
  r.payload["tier"] = v.is_series() ? "series" : "sequence";
  StandardPartResult sp = standard_part(v, o.settings);
  std::string line = form;
  if (sp.value) {
    r.payload["standardPart"] = sp.value->to_string();
    line += "  (≈ " + sp.value->to_string() + ")";
  }
  r.payload["standardPartVerdict"] = to_string(sp.verdict);
  r.lines.push_back(line);
  return r;
}

Outcome do_classify(const Options& o) {
  if (o.positional.size() != 1) throw UsageError("classify EXPR");
  VirtualNumber v = parse_virtual(o.positional[0], o.settings);
  FinitudeReport fr = classify_finitude(v, o.settings);
  RealComparisonReport cr = cmp_reals(v, o.settings);
  Outcome r;
  if (fr.tag) r.payload["tag"] = to_string(*fr.tag);
  r.payload["verdict"] = to_string(fr.verdict);
  r.payload["depth"] = fr.verdict.depth;
  r.payload["cmpReals"] = cr.cmp == RealComparison::AboveR   ? "AboveR"
                          : cr.cmp == RealComparison::BelowR ? "BelowR"
                                                             : "Neither";
  if (fr.verdict.witness) r.payload["witness"] = *fr.verdict.witness;
  std::string line = classification_text(fr, cr);
  if (!fr.verdict.is_holds()) line += " [" + verdict_text(fr.verdict) + "]";
  r.lines.push_back(line);
  return r;
}

Outcome do_near(const Options& o) {
  if (o.positional.size() != 2) throw UsageError("near EXPR1 EXPR2");
  VirtualNumber a = parse_virtual(o.positional[0], o.settings);
  VirtualNumber b = parse_virtual(o.positional[1], o.settings);
  Verdict v = near(a, b, o.settings);
  Outcome r;
  r.payload = verdict_json(v);
  r.lines.push_back(verdict_text(v));
  r.exit_code = verdict_exit(v);
  return r;
}

Outcome do_order(const Options& o) {
  if (o.positional.size() != 2) throw UsageError("order EXPR1 EXPR2");
  VirtualNumber beta = parse_virtual(o.positional[0], o.settings);
  VirtualNumber alpha = parse_virtual(o.positional[1], o.settings);
  Verdict in_o = in_order_of(beta, alpha, o.settings);
  Verdict neg = negligible(beta, alpha, o.settings);
  MagnitudeComparison mc = compare_magnitude(beta, alpha, o.settings);
  Outcome r;
  r.payload["inOrderOf"] = to_string(in_o);
  r.payload["negligible"] = to_string(neg);
  r.payload["magnitude"] = to_string(mc.order);
  r.payload["verdict"] = to_string(mc.verdict);
  r.lines.push_back("in O(second): " + verdict_text(in_o));
  r.lines.push_back("negligible (<<): " + verdict_text(neg));
  r.lines.push_back("magnitude: " + to_string(mc.order));
  return r;
}

Outcome do_deriv(const Options& o) {
  if (o.positional.size() != 2) throw UsageError("deriv EXPR X [--at VALUE]");
  ExprPtr f = parse_expr(o.positional[0]);
  Scalar x = parse_scalar_arg(o.positional[1]);
  std::optional<Scalar> at;
  if (o.at_value) at = parse_scalar_arg(*o.at_value);
  DerivativeReport rep =
      derivative_at(f, x, InfinitesimalFamily::defaults(), o.settings, at);
  Outcome r;
  if (rep.value) r.payload["value"] = rep.value->to_double();
  if (rep.oracle) r.payload["oracle"] = *rep.oracle;
  json probes;
  for (const auto& [name, sp] : rep.per_probe)
    probes[name] = sp ? json(sp->to_double()) : json(nullptr);
  r.payload["perProbe"] = probes;
  r.payload["verdict"] = to_string(rep.verdict);
  r.payload["note"] = rep.note;
  if (rep.value)
    r.lines.push_back("derivative = " + rep.value->to_string() + "  [" +
                      verdict_text(rep.verdict) + "]");
  else
    r.lines.push_back("derivative undefined: " + rep.note);
  if (rep.oracle) r.lines.push_back("symbolic oracle = " + fmt(*rep.oracle));
  r.exit_code = verdict_exit(rep.verdict);
  return r;
}

Outcome do_taylor(const Options& o) {
  if (o.positional.size() != 3) throw UsageError("taylor EXPR X N");
  ExprPtr f = parse_expr(o.positional[0]);
  Scalar x = parse_scalar_arg(o.positional[1]);
  int n = std::stoi(o.positional[2]);
  TaylorResult t = taylor_expand(f, x, n, o.settings);
  Outcome r;
  json coeffs = json::array();
  std::string line = "coefficients:";
  for (const auto& c : t.coeffs) {
    coeffs.push_back(c.to_string());
    line += " " + c.to_string();
  }
  r.payload["coefficients"] = coeffs;
  r.payload["remainder"] = to_string(t.remainder);
  r.lines.push_back(line);
  r.lines.push_back("remainder in O(del^" + std::to_string(n + 1) +
                    "): " + verdict_text(t.remainder));
  r.exit_code = verdict_exit(t.remainder);
  return r;
}

json integral_json(const IntegralReport& rep) {
  json j;
  if (rep.value) j["value"] = *rep.value;
  j["verdict"] = to_string(rep.verdict);
  j["depth"] = rep.depth;
  json schemes;
  for (const auto& [name, tail] : rep.per_scheme) schemes[name] = tail;
  j["perScheme"] = schemes;
  return j;
}

Outcome do_integrate(const Options& o) {
  if (o.positional.size() != 3) throw UsageError("integrate EXPR A B");
  ExprPtr f = parse_expr(o.positional[0]);
  double a = parse_double_arg(o.positional[1]);
  double b = parse_double_arg(o.positional[2]);
  IntegralReport rep = integrate(f, a, b, o.settings);
  Outcome r;
  r.payload = integral_json(rep);
  r.lines.push_back("integral = " + fmt(*rep.value) + "  [" + verdict_text(rep.verdict) + "]");
  r.exit_code = verdict_exit(rep.verdict);
  return r;
}

Outcome do_uc(const Options& o) {
  if (o.positional.size() != 2) throw UsageError("uc EXPR SET  (SET like R or [0,10])");
  ExprPtr f = parse_expr(o.positional[0]);
  IntervalSet A = IntervalSet::parse(o.positional[1]);
  UniformContinuityReport rep = check_uniform_continuity(f, A, o.settings);
  Outcome r;
  r.payload = verdict_json(rep.verdict);
  if (rep.witness_point) r.payload["witnessPoint"] = *rep.witness_point;
  if (rep.witness_gap) r.payload["witnessGap"] = *rep.witness_gap;
  std::string line = rep.verdict.is_holds() ? "HoldsToDepth(" + std::to_string(rep.depth) + ")"
                                            : verdict_text(rep.verdict);
  if (rep.witness_gap)
    line += "  witness: a = " + fmt(*rep.witness_point) + ", gap = " + fmt(*rep.witness_gap);
  r.lines.push_back(line);
  r.exit_code = verdict_exit(rep.verdict);
  return r;
}

Outcome do_geom(const Options& o) {
  if (o.positional.size() != 4) throw UsageError("geom KIND EXPR A B  (KIND: area|volume|length|surface)");
  const std::string& kind_s = o.positional[0];
  GeomKind kind;
  if (kind_s == "area") kind = GeomKind::Area;
  else if (kind_s == "volume") kind = GeomKind::VolumeRevolution;
  else if (kind_s == "length") kind = GeomKind::ArcLength;
  else if (kind_s == "surface") kind = GeomKind::SurfaceRevolution;
  else throw UsageError("unknown geometry kind: " + kind_s);
  ExprPtr f = parse_expr(o.positional[1]);
  double a = parse_double_arg(o.positional[2]);
  double b = parse_double_arg(o.positional[3]);
  IntegralReport rep = geom_measure(kind, f, a, b, o.settings);
  Outcome r;
  r.payload = integral_json(rep);
  r.payload["kind"] = to_string(kind);
  r.lines.push_back(to_string(kind) + " = " + fmt(*rep.value) + "  [" +
                    verdict_text(rep.verdict) + "]");
  r.exit_code = verdict_exit(rep.verdict);
  return r;
}

Outcome do_ftc(const Options& o) {
  if (o.positional.size() != 3) throw UsageError("ftc EXPR A X");
  ExprPtr f = parse_expr(o.positional[0]);
  double a = parse_double_arg(o.positional[1]);
  double x = parse_double_arg(o.positional[2]);
  FtcReport rep = ftc_check(f, a, x, o.settings);
  Outcome r;
  r.payload = verdict_json(rep.verdict);
  r.payload["deepestRatio"] = rep.deepest_ratio;
  r.lines.push_back("ds ~= f(x) dx up to o(dx): " + verdict_text(rep.verdict) +
                    "  (deepest ratio " + fmt(rep.deepest_ratio) + ")");
  r.exit_code = verdict_exit(rep.verdict);
  return r;
}

Outcome do_props(const Options& o) {
  std::vector<SuiteResult> suites;
  if (o.positional.empty() || o.positional[0] == "all") {
    suites = run_all_prop_suites(o.settings, o.instances);
  } else {
    suites.push_back(run_prop_suite(o.positional[0], o.settings, o.instances));
  }
  Outcome r;
  json jsuites = json::array();
  bool all_pass = true;
  for (const auto& suite : suites) {
    json js;
    js["suite"] = suite.suite;
    js["pass"] = suite.all_pass();
    json results = json::array();
    for (const auto& p : suite.results) {
      json jp;
      jp["name"] = p.name;
      jp["pass"] = p.pass;
      if (!p.pass) jp["detail"] = p.detail;
      results.push_back(jp);
      r.lines.push_back(std::string(p.pass ? "[pass] " : "[FAIL] ") + suite.suite + ": " +
                        p.name + (p.pass ? "" : "  -- " + p.detail));
      all_pass = all_pass && p.pass;
    }
    js["results"] = results;
    jsuites.push_back(js);
  }
  r.payload["suites"] = jsuites;
  r.exit_code = all_pass ? 0 : 1;
  r.lines.push_back(all_pass ? "all propositions pass" : "some propositions FAILED");
  return r;
}

json meta_json(const Settings& s) {
  json m;
  m["trunc"] = s.trunc;
  m["depth"] = s.depth;
  m["tol"] = s.tol;
  m["seed"] = s.seed;
  return m;
}

void emit(const Options& o, const std::string& verb, const Outcome& outcome,
          std::ostream& out) {
  if (o.json_out) {
    json j;
    j["status"] = outcome.exit_code == 2 ? "error" : "ok";
    j["verb"] = verb;
    j["payload"] = outcome.payload;
    j["meta"] = meta_json(o.settings);
    out << j.dump() << "\n";
  } else {
    for (const auto& line : outcome.lines) out << line << "\n";
  }
}

}  // namespace

int repl(std::istream& in, std::ostream& out, Settings s) {
  std::string line;
  out << "vcalc repl — expressions over x-free virtuals; :set NAME VALUE, :quit\n";
  while (true) {
    out << "vcalc> " << std::flush;
    if (!std::getline(in, line)) break;
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t");
    std::string trimmed = line.substr(start, end - start + 1);
    if (trimmed == ":quit" || trimmed == ":q") break;
    if (trimmed.rfind(":set", 0) == 0) {
      std::istringstream iss(trimmed.substr(4));
      std::string name, value;
      iss >> name >> value;
      try {
        if (name == "trunc") s.trunc = std::stoi(value);
        else if (name == "depth") s.depth = std::stoi(value);
        else if (name == "tol") s.tol = std::stod(value);
        else if (name == "seed") s.seed = std::stoull(value);
        else {
          out << "error: unknown setting '" << name << "'\n";
          continue;
        }
        out << name << " = " << value << "\n";
      } catch (const std::exception&) {
        out << "error: bad value for :set " << name << "\n";
      }
      continue;
    }
    try {
      VirtualNumber v = parse_virtual(trimmed, s);
      std::string form = v.is_series() ? normal_form(v) : v.describe();
      StandardPartResult sp = standard_part(v, s);
      out << form;
      if (sp.value) out << "  (≈ " << sp.value->to_string() << ")";
      out << "\n";
    } catch (const Error& e) {
      out << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  try {
    o = parse_args(args);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (o.verb == "repl") {
    return repl(std::cin, out, o.settings);
  }
  try {
    Outcome outcome;
    if (o.verb == "eval") outcome = do_eval(o);
    else if (o.verb == "classify") outcome = do_classify(o);
    else if (o.verb == "near") outcome = do_near(o);
    else if (o.verb == "order") outcome = do_order(o);
    else if (o.verb == "deriv") outcome = do_deriv(o);
    else if (o.verb == "taylor") outcome = do_taylor(o);
    else if (o.verb == "integrate") outcome = do_integrate(o);
    else if (o.verb == "uc") outcome = do_uc(o);
    else if (o.verb == "geom") outcome = do_geom(o);
    else if (o.verb == "ftc") outcome = do_ftc(o);
    else if (o.verb == "props") outcome = do_props(o);
    else {
      err << "usage error: unknown verb '" << o.verb << "'\n";
      return 2;
    }
    emit(o, o.verb, outcome, out);
    return outcome.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (o.json_out) {
      json j;
      j["status"] = "error";
      j["verb"] = o.verb;
      j["payload"] = {{"message", e.what()}};
      j["meta"] = meta_json(o.settings);
      out << j.dump() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace vc::cli
