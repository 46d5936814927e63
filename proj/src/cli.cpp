#include "qcomm/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qcomm/json_io.hpp"
#include "qcomm/parser.hpp"
#include "qcomm/printing.hpp"
#include "qcomm/session.hpp"

namespace qcomm {
namespace {

struct Options {
  int order = 3;
  std::string space = "A0";
  bool space_explicit = false;
  std::string out_path;
  bool json = false;
};

bool mentions_derivative(const std::string& src) {
  return src.find("dx") != std::string::npos || src.find("dy") != std::string::npos;
}

/// Expressions naming dx or dy land in the extension unless --space
/// pinned the space.
void infer_space(Options& o, const std::string& src) {
  if (!o.space_explicit && o.space == "A0" && mentions_derivative(src)) o.space = "E";
}

std::string join_tokens(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string seconds_str(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

void deliver(const Options& o, std::ostream& out, const std::string& payload) {
  if (o.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out_path + " for writing");
  f << payload;
  if (!f) throw std::runtime_error("write failed: " + o.out_path);
}

EvalContext context_of(const Session& s, const std::string& space) {
  EvalContext ctx;
  ctx.field = s.field;
  ctx.hopf = &s.hopf;
  const Braiding& b = s.braiding(space);
  ctx.space = b.mod;
  ctx.braiding = &b;
  return ctx;
}

std::string show_value(const Session& s, const std::string& space, const Value& v) {
  if (v.sort == Sort::scalar) return print_scalar(v.scalar);
  const Algebra& a = v.sort == Sort::hopf ? s.hopf.alg : s.space(space).alg;
  return print_element(a, v.element);
}

Json value_to_json(const Session& s, const std::string& space, const Value& v) {
  Json j;
  if (v.sort == Sort::scalar) {
    j["sort"] = "scalar";
    j["canonical"] = print_scalar(v.scalar);
    j["scalar"] = scalar_to_json(v.scalar, *s.field);
    return j;
  }
  const Algebra& a = v.sort == Sort::hopf ? s.hopf.alg : s.space(space).alg;
  j["sort"] = v.sort == Sort::hopf ? "hopf" : "space";
  j["canonical"] = print_element(a, v.element);
  j["terms"] = element_to_json(v.element, a, *s.field);
  return j;
}

int emit_value(const Options& o, std::ostream& out, const Session& s, const Value& v) {
  if (o.json)
    deliver(o, out, json_bytes(value_to_json(s, o.space, v)));
  else
    deliver(o, out, show_value(s, o.space, v) + "\n");
  return 0;
}

int cmd_build(const Options& o, std::ostream& out) {
  Stopwatch timer;
  auto s = build_session(o.order, o.space == "E");
  double secs = timer.seconds();
  if (o.json) {
    Json j;
    j["order"] = o.order;
    j["hopf_dim"] = s->hopf.alg.dim;
    if (s->qt) j["r_terms"] = s->qt->R.terms.size();
    if (s->plane) j["A0_dim"] = s->plane->alg.dim;
    if (s->extended) j["E_dim"] = s->extended->alg.dim;
    deliver(o, out, json_bytes(j));
    return 0;
  }
  std::ostringstream text;
  text << "order " << o.order << "\n";
  text << "hopf dim " << s->hopf.alg.dim << "\n";
  if (s->qt) text << "R terms " << s->qt->R.terms.size() << "\n";
  if (s->plane) text << "A0 dim " << s->plane->alg.dim << "\n";
  if (s->extended) text << "E dim " << s->extended->alg.dim << "\n";
  text << "built in " << seconds_str(secs) << "\n";
  deliver(o, out, text.str());
  return 0;
}

int cmd_eval(Options o, std::ostream& out, const std::string& src) {
  infer_space(o, src);
  auto s = build_session(o.order, o.space == "E");
  EvalContext ctx = context_of(*s, o.space);
  return emit_value(o, out, *s, evaluate(parse_expression(src), ctx));
}

int cmd_pair(Options o, std::ostream& out, const std::string& kind,
             const std::string& e1, const std::string& e2) {
  infer_space(o, e1 + " " + e2);
  auto s = build_session(o.order, o.space == "E");
  EvalContext ctx = context_of(*s, o.space);
  Value v;
  v.sort = Sort::space;
  if (kind == "chi") {
    Element a = evaluate_in_space(parse_expression(e1), ctx);
    Element b = evaluate_in_space(parse_expression(e2), ctx);
    v.element = braid(*ctx.braiding, tensor(a, b));
  } else if (kind == "comm") {
    Element a = evaluate_in_space(parse_expression(e1), ctx);
    Element b = evaluate_in_space(parse_expression(e2), ctx);
    v.element = q_commutator(*ctx.braiding, a, b);
  } else {
    Element h = evaluate_in_hopf(parse_expression(e1), ctx);
    Element a = evaluate_in_space(parse_expression(e2), ctx);
    v.element = act(*ctx.space, h, a);
  }
  return emit_value(o, out, *s, v);
}

int cmd_verify(const Options& o, std::ostream& out, const std::string& suite) {
  auto s = build_session(o.order, o.space == "E");
  SuiteReport report = run_suite(*s, suite, o.space);
  if (o.json) {
    Json j;
    j["suite"] = report.suite;
    j["space"] = report.space;
    j["status"] = report.passed() ? "pass" : "fail";
    j["checks"] = reports_to_json(report.checks);
    deliver(o, out, json_bytes(j));
    return report.passed() ? 0 : 1;
  }
  std::ostringstream text;
  for (const CheckReport& c : report.checks) {
    text << c.status() << " " << c.check << " (" << seconds_str(c.seconds) << ")\n";
    if (!c.note.empty()) text << "  note: " << c.note << "\n";
    if (c.counterexample) {
      text << "  inputs: " << join_tokens(c.counterexample->inputs) << "\n";
      text << "  lhs: " << c.counterexample->lhs << "\n";
      text << "  rhs: " << c.counterexample->rhs << "\n";
    }
  }
  std::size_t failing = 0;
  for (const CheckReport& c : report.checks)
    if (!c.pass) ++failing;
  text << "suite " << report.suite << " on " << report.space << ": "
       << report.checks.size() << " checks, ";
  if (failing == 0)
    text << "all pass";
  else
    text << failing << " failing";
  text << " (" << seconds_str(report.seconds) << ")\n";
  deliver(o, out, text.str());
  return report.passed() ? 0 : 1;
}

/// --space doubles as the subspace for qlie exports: A0 and E name the
/// whole space, anything else is a comma-separated list of basis
/// monomial expressions, placed in E when a derivative generator is
/// mentioned and in A0 otherwise.
std::vector<std::uint32_t> resolve_members(const Session& s, const std::string& spec,
                                           std::string& ambient) {
  if (spec == "A0" || spec == "E") {
    ambient = spec;
    const Algebra& a = s.space(spec).alg;
    std::vector<std::uint32_t> all(a.dim);
    for (std::uint32_t i = 0; i < a.dim; ++i) all[i] = i;
    return all;
  }
  ambient = (spec.find("dx") != std::string::npos || spec.find("dy") != std::string::npos)
                ? "E"
                : "A0";
  EvalContext ctx = context_of(s, ambient);
  std::vector<std::uint32_t> members;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    Element e = evaluate_in_space(parse_expression(item), ctx);
    if (e.terms.size() != 1 || !e.terms[0].second.is_one())
      throw std::invalid_argument("span member '" + item + "' is not a basis monomial");
    members.push_back((std::uint32_t)e.terms[0].first);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return members;
}

int cmd_export(const Options& o, std::ostream& out, const std::string& kind) {
  bool needs_ext = o.space == "E" || o.space.find("dx") != std::string::npos ||
                   o.space.find("dy") != std::string::npos;
  auto s = build_session(o.order, needs_ext);
  Json j;
  if (kind == "hopf") {
    j = hopf_to_json(s->hopf, *s->field, s->qt ? &s->qt->R : nullptr);
  } else if (kind == "module") {
    if (o.space != "A0" && o.space != "E")
      throw std::invalid_argument("module export expects --space A0 or E");
    j = module_to_json(s->space(o.space), *s->field);
  } else if (kind == "qlie") {
    std::string ambient;
    std::vector<std::uint32_t> members = resolve_members(*s, o.space, ambient);
    j = qlie_to_json(export_qlie(s->braiding(ambient), members, s->order), *s->field);
  } else {
    throw std::invalid_argument("unknown export kind '" + kind + "'");
  }
  deliver(o, out, json_bytes(j));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact braided commutators on the reduced quantum plane"};
  app.set_help_all_flag("--help-all");
  app.add_option("--order", o.order, "Root-of-unity order, odd")->capture_default_str();
  app.add_option("--space", o.space, "Active space: A0 or E")->capture_default_str();
  app.add_option("--out", o.out_path, "Write the result to this file");
  app.add_flag("--json", o.json, "Machine-readable output");
  app.require_subcommand(1);
  app.fallthrough();

  auto* build = app.add_subcommand("build", "Build the session and report sizes");
  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->fallthrough(false);
  eval->allow_extras();
  eval->usage("eval EXPR...");
  eval->add_option("--order", o.order, "Root-of-unity order, odd");
  eval->add_option("--space", o.space, "Active space: A0 or E");
  eval->add_option("--out", o.out_path, "Write the result to this file");
  eval->add_flag("--json", o.json, "Machine-readable output");
  std::string pair_a, pair_b;
  auto* chi = app.add_subcommand("chi", "Braiding of two space elements");
  chi->add_option("e1", pair_a, "First element")->required();
  chi->add_option("e2", pair_b, "Second element")->required();
  auto* comm = app.add_subcommand("comm", "Braided commutator of two space elements");
  comm->add_option("e1", pair_a, "First element")->required();
  comm->add_option("e2", pair_b, "Second element")->required();
  auto* act_cmd = app.add_subcommand("act", "Action of a hopf element on a space element");
  act_cmd->add_option("hopf", pair_a, "Hopf element")->required();
  act_cmd->add_option("elem", pair_b, "Space element")->required();
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "hopf | qt | yb | module | leibniz | covariance | antisym | chi-yb | jacobi | all")
      ->required();
  std::string kind;
  auto* exp = app.add_subcommand("export", "Write a JSON export");
  exp->add_option("kind", kind, "qlie | hopf | module")->required();

  std::vector<char*> argv;
  std::string prog = "qcomm";
  argv.push_back(prog.data());
  std::vector<std::string> storage = args;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  o.space_explicit = app.count("--space") > 0 || eval->count("--space") > 0;

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (eval->parsed()) return cmd_eval(o, out, join_tokens(eval->remaining()));
    if (chi->parsed()) return cmd_pair(o, out, "chi", pair_a, pair_b);
    if (comm->parsed()) return cmd_pair(o, out, "comm", pair_a, pair_b);
    if (act_cmd->parsed()) return cmd_pair(o, out, "act", pair_a, pair_b);
    if (verify->parsed()) return cmd_verify(o, out, suite);
    if (exp->parsed()) return cmd_export(o, out, kind);
    err << "no command given\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qcomm
