#include "liftscope/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>

#include "liftscope/census.hpp"
#include "liftscope/decompose.hpp"
#include "liftscope/errors.hpp"
#include "liftscope/parse.hpp"
#include "liftscope/report.hpp"

namespace liftscope {

namespace {

struct Options {
  std::string f, g;
  std::string fvar, gvar;
  std::string json_path, csv_path;
  std::vector<std::string> certificates;
  bool discriminants = false;
  std::int64_t max_b = 0;
  std::vector<std::int64_t> checkpoints;
  unsigned threads = 0;
  double tolerance = 0.08;
  std::string param;
  std::string at;
  // sources construct
  std::string G, c = "0", alpha = "1", beta = "0", E = "1";
};

UniPoly parse_named(const std::string& text, const std::string& var, const char* what) {
  if (text.empty()) throw InputError(std::string("missing polynomial ") + what);
  try {
    return var.empty() ? parse_poly(text).poly : parse_poly(text, var).poly;
  } catch (const ParseError& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

ParamCertificate parse_certificate(const std::string& text) {
  std::size_t split = text.find(",B=");
  if (text.rfind("A=", 0) != 0 || split == std::string::npos) {
    throw InputError("certificate must have the form A=<expr>,B=<expr>");
  }
  ParsedPoly a = parse_poly(text.substr(2, split - 2));
  ParsedPoly b = parse_poly(text.substr(split + 3));
  if (!a.var.empty() && !b.var.empty() && a.var != b.var) {
    throw InputError("certificate: A and B use different variables (" + a.var + ", " + b.var + ")");
  }
  return {a.poly, b.poly};
}

std::vector<std::int64_t> parse_checkpoints(const Options& o) {
  std::vector<std::int64_t> out;
  if (!o.checkpoints.empty()) {
    out = o.checkpoints;
  } else {
    if (o.max_b <= 0) throw InputError("census needs --max-B or --checkpoints");
    for (std::int64_t b = 10; b < o.max_b; b *= 10) out.push_back(b);
    out.push_back(o.max_b);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] <= 0 || (i > 0 && out[i] <= out[i - 1])) throw InputError("checkpoints must be positive and increasing");
  }
  return out;
}

void write_json_file(const std::string& path, const nlohmann::json& j, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(path);
  if (!os) throw InputError("cannot write " + path);
  os << j.dump(2) << "\n";
}

CensusSeries run_census(const Options& o, const UniPoly& f, const UniPoly& g) {
  CensusOptions copt;
  copt.threads = o.threads;
  CensusSeries s = census_curve(f, g, parse_checkpoints(o), copt);
  try {
    s.fit = fit_exponent(s);
  } catch (const InputError&) {
    // Too few nonzero checkpoints; the report carries a null slope.
  }
  return s;
}

void print_census(std::ostream& out, const CensusSeries& s, const LiftReport& r, double tolerance) {
  out << std::right << std::setw(14) << "B" << std::setw(12) << "count" << "\n";
  for (std::size_t i = 0; i < s.checkpoints.size(); ++i) {
    out << std::setw(14) << s.checkpoints[i] << std::setw(12) << s.counts[i] << "\n";
  }
  if (s.fit) out << "fitted slope " << std::fixed << std::setprecision(4) << s.fit->slope << " over " << s.fit->points << " checkpoints\n";
  else out << "fitted slope: too few checkpoints with count >= 5\n";
  VerdictOptions v;
  v.tolerance = tolerance;
  FitVerdict verdict = compare_with_prediction(s, r, v);
  out << (verdict.consistent ? "consistent: " : "NOT consistent: ") << verdict.text << "\n";
}

int cmd_analyze(const Options& o, std::ostream& out) {
  UniPoly f = parse_named(o.f, o.fvar, "f"), g = parse_named(o.g, o.gvar, "g");
  std::vector<ParamCertificate> certs;
  for (const std::string& c : o.certificates) certs.push_back(parse_certificate(c));
  AnalyzeOptions aopt;
  aopt.include_discriminants = o.discriminants;
  LiftReport r = analyze(f, g, certs, aopt);
  write_text(out, r);
  std::optional<CensusSeries> census;
  if (o.max_b > 0 || !o.checkpoints.empty()) {
    census = run_census(o, f, g);
    out << "\n";
    print_census(out, *census, r, o.tolerance);
  }
  if (!o.json_path.empty()) write_json_file(o.json_path, to_json(r, census ? &*census : nullptr), out);
  return kExitOk;
}

int cmd_census(const Options& o, std::ostream& out) {
  UniPoly f = parse_named(o.f, o.fvar, "f"), g = parse_named(o.g, o.gvar, "g");
  std::vector<ParamCertificate> certs;
  for (const std::string& c : o.certificates) certs.push_back(parse_certificate(c));
  LiftReport r = analyze(f, g, certs);
  CensusSeries s = run_census(o, f, g);
  print_census(out, s, r, o.tolerance);
  out << "predicted: " << predicted_growth(r) << "\n";
  if (!o.csv_path.empty()) {
    if (o.csv_path == "-") {
      write_csv(out, s);
    } else {
      std::ofstream os(o.csv_path);
      if (!os) throw InputError("cannot write " + o.csv_path);
      write_csv(os, s);
    }
  }
  if (!o.json_path.empty()) write_json_file(o.json_path, to_json(r, &s), out);
  return kExitOk;
}

void print_source(std::ostream& out, const QuadraticSource& s) {
  out << "alpha = " << to_string(s.alpha) << ", beta = " << to_string(s.beta) << ", c = " << to_string(s.c)
      << ", E(U) = " << s.E.to_string("U") << "\n";
  out << "  X = " << s.A().to_string("t") << ", Y = " << s.B().to_string("t") << "\n";
}

nlohmann::json source_json(const QuadraticSource& s) {
  return {{"alpha", to_string(s.alpha)}, {"beta", to_string(s.beta)}, {"c", to_string(s.c)},
          {"E", s.E.to_string("U")},      {"A", s.A().to_string("t")},  {"B", s.B().to_string("t")}};
}

int cmd_sources_detect(const Options& o, std::ostream& out) {
  UniPoly f = parse_named(o.f, o.fvar, "f"), g = parse_named(o.g, o.gvar, "g");
  std::vector<QuadraticSource> found = detect_quadratic_sources(f, g);
  if (found.empty()) {
    out << (source_even_center(g) ? "no quadratic sources\n" : "no quadratic sources (g is not even about a center)\n");
  }
  nlohmann::json j = nlohmann::json::array();
  for (const QuadraticSource& s : found) {
    print_source(out, s);
    j.push_back(source_json(s));
  }
  if (!o.json_path.empty()) write_json_file(o.json_path, {{"sources", j}}, out);
  return kExitOk;
}

int cmd_sources_construct(const Options& o, std::ostream& out) {
  UniPoly G = parse_named(o.G, "", "G"), E = parse_named(o.E, "", "E");
  ConstructedSource cs = construct_quadratic_source(G, parse_rational(o.c), parse_rational(o.alpha),
                                                    parse_rational(o.beta), E);
  out << "f(x) = " << cs.f.to_string("x") << "\n";
  out << "g(y) = " << cs.g.to_string("y") << "\n";
  print_source(out, cs.source);
  if (!o.json_path.empty()) {
    write_json_file(o.json_path,
                    {{"f", cs.f.to_string("x")}, {"g", cs.g.to_string("y")}, {"source", source_json(cs.source)}}, out);
  }
  return kExitOk;
}

int cmd_activity(const Options& o, std::ostream& out) {
  ParsedPoly p = parse_poly(o.param);
  std::string var = p.var.empty() ? "t" : p.var;
  ActivityResult a = activity_witness(p.poly);
  out << "A(" << var << ") = " << p.poly.to_string(var) << "\n";
  out << "denominator bound M = " << a.M.get_str() << "\n";
  if (a.active) {
    out << "active: A(" << to_string(a.witness) << ") = " << to_string(p.poly.eval(a.witness)) << "\n";
    out << "integer coset: " << var << " = " << to_string(a.witness) << " + " << to_string(a.lambda) << "*u\n";
  } else {
    out << "inactive; congruence certificate:\n";
    for (const CongruenceCheck& c : a.certificate) {
      out << "  b = " << c.b.get_str() << ": no residue modulo " << c.modulus.get_str() << " ("
          << c.residues_checked.get_str() << " checked)\n";
    }
  }
  if (!o.json_path.empty()) write_json_file(o.json_path, to_json(a), out);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  UniPoly f = parse_named(o.f, o.fvar, "f"), g = parse_named(o.g, o.gvar, "g");
  std::vector<UniPoly> h = decompositions(f, g);
  if (h.empty()) out << "no h with f = g(h)\n";
  nlohmann::json j = nlohmann::json::array();
  for (const UniPoly& p : h) {
    out << "h(x) = " << p.to_string("x") << "\n";
    j.push_back(p.to_string("x"));
  }
  if (!o.json_path.empty()) write_json_file(o.json_path, {{"decompositions", j}}, out);
  return kExitOk;
}

int cmd_fibers(const Options& o, std::ostream& out) {
  UniPoly f = parse_named(o.f, o.fvar, "f"), g = parse_named(o.g, o.gvar, "g");
  if (o.at.empty()) throw InputError("fibers needs --at <rational>");
  Rational x = parse_rational(o.at);
  BiFactorization fact = factor_separated(f, g);
  CollisionSet coll = collision_set(fact, o.discriminants);
  FiberCheck c = fiber_formula_check(f, g, fact, coll, x);
  out << "x = " << to_string(x) << "\n";
  out << "rational y with g(y) = f(x): " << c.lhs << "\n";
  out << "graph factors: " << c.s << "\n";
  for (std::size_t i = 0; i < c.per_factor.size(); ++i) {
    out << "  " << fact.nongraph_factors[i].to_string() << ": " << c.per_factor[i] << "\n";
  }
  out << "identity holds: " << c.lhs << " = " << c.rhs << "\n";
  if (!o.json_path.empty()) {
    write_json_file(o.json_path,
                    {{"x", to_string(x)}, {"fiber", c.lhs}, {"graphs", c.s}, {"perFactor", c.per_factor}}, out);
  }
  return kExitOk;
}

void add_pair(CLI::App* sub, Options& o) {
  sub->add_option("-f", o.f, "f(x)");
  sub->add_option("-g", o.g, "g(y)");
  sub->add_option("--f-var", o.fvar, "variable name in f (default: inferred)");
  sub->add_option("--g-var", o.gvar, "variable name in g (default: inferred)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"liftscope: rational lifts of integer inputs through f(x) = g(y)"};
  app.set_config("--config", "", "key=value file with the same keys as the flags");
  app.require_subcommand(1);
  Options o;

  auto add_census_opts = [&](CLI::App* sub) {
    sub->add_option("--max-B", o.max_b, "largest |n| counted");
    sub->add_option("--checkpoints", o.checkpoints, "comma-separated increasing bounds")->delimiter(',');
    sub->add_option("--threads", o.threads, "census threads (0: LIFTSCOPE_THREADS or all cores)");
    sub->add_option("--tolerance", o.tolerance, "slope tolerance for the verdict");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "classify components and predict growth");
  add_pair(analyze_cmd, o);
  analyze_cmd->add_option("--certificate", o.certificates, "A=<expr>,B=<expr>; repeatable");
  analyze_cmd->add_flag("--discriminants", o.discriminants, "add Y-discriminants to the collision set");
  analyze_cmd->add_option("--json", o.json_path, "write the JSON report ('-' for stdout)");
  add_census_opts(analyze_cmd);

  CLI::App* census_cmd = app.add_subcommand("census", "count integer inputs with new rational lifts");
  add_pair(census_cmd, o);
  add_census_opts(census_cmd);
  census_cmd->add_option("--certificate", o.certificates, "A=<expr>,B=<expr>; repeatable");
  census_cmd->add_option("--csv", o.csv_path, "write B,count rows ('-' for stdout)");
  census_cmd->add_option("--json", o.json_path, "write the JSON report");

  CLI::App* sources_cmd = app.add_subcommand("sources", "quadratic sources");
  sources_cmd->require_subcommand(1);
  CLI::App* detect_cmd = sources_cmd->add_subcommand("detect", "find square-root components");
  add_pair(detect_cmd, o);
  detect_cmd->add_option("--json", o.json_path, "write JSON");
  CLI::App* construct_cmd = sources_cmd->add_subcommand("construct", "build (f, g) from source data");
  construct_cmd->add_option("--G", o.G, "outer polynomial G")->required();
  construct_cmd->add_option("--c", o.c, "center");
  construct_cmd->add_option("--alpha", o.alpha, "nonzero rational");
  construct_cmd->add_option("--beta", o.beta, "rational");
  construct_cmd->add_option("--E", o.E, "nonzero polynomial E(U)");
  construct_cmd->add_option("--json", o.json_path, "write JSON");

  CLI::App* activity_cmd = app.add_subcommand("activity", "integer values of A(t) at rational t");
  activity_cmd->add_option("--param", o.param, "A(t)")->required();
  activity_cmd->add_option("--json", o.json_path, "write JSON");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "all h with f = g(h)");
  add_pair(decompose_cmd, o);
  decompose_cmd->add_option("--json", o.json_path, "write JSON");

  CLI::App* fibers_cmd = app.add_subcommand("fibers", "check the fiber-count identity at x");
  add_pair(fibers_cmd, o);
  fibers_cmd->add_option("--at", o.at, "rational x");
  fibers_cmd->add_flag("--discriminants", o.discriminants, "add Y-discriminants to the collision set");
  fibers_cmd->add_option("--json", o.json_path, "write JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (census_cmd->parsed()) return cmd_census(o, out);
    if (detect_cmd->parsed()) return cmd_sources_detect(o, out);
    if (construct_cmd->parsed()) return cmd_sources_construct(o, out);
    if (activity_cmd->parsed()) return cmd_activity(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (fibers_cmd->parsed()) return cmd_fibers(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  }
  return kExitInputError;
}

}  // namespace liftscope
