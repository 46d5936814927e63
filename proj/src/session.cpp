#include "qcomm/session.hpp"

#include <stdexcept>

namespace qcomm {

const ModuleAlgebra& Session::space(const std::string& name) const {
  if (name == "A0") {
    if (!plane) throw std::invalid_argument("space A0 needs an order-3 session");
    return *plane;
  }
  if (name == "E") {
    if (!extended)
      throw std::invalid_argument("space E was not built in this session");
    return *extended;
  }
  throw std::invalid_argument("unknown space '" + name + "' (use A0 or E)");
}

const Braiding& Session::braiding(const std::string& name) const {
  space(name);
  return name == "A0" ? *plane_braiding : *extended_braiding;
}

std::unique_ptr<Session> build_session(int order, bool with_extension) {
  auto s = std::make_unique<Session>();
  s->order = order;
  s->field = &CycloField::of_order(order);
  s->hopf = build_uqsl2(order);
  if (order != 3) return s;
  s->qt = build_standard_r(s->hopf);
  s->plane = build_quantum_plane(s->hopf, *s->qt);
  s->plane_braiding = build_braiding(*s->plane, *s->qt);
  if (with_extension) {
    s->extended = build_extended_plane(s->hopf, *s->qt);
    s->extended_braiding = build_braiding(*s->extended, *s->qt);
  }
  return s;
}

bool SuiteReport::passed() const {
  for (const CheckReport& c : checks)
    if (!c.pass) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hopf", "qt", "yb", "module", "leibniz", "covariance",
      "antisym", "chi-yb", "jacobi", "all",
  };
  return names;
}

namespace {

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (CheckReport& r : more) out.push_back(std::move(r));
}

const QTStructure& qt_of(const Session& s) {
  if (!s.qt) throw std::invalid_argument("this suite needs the order-3 R-matrix");
  return *s.qt;
}

void run_one(const Session& s, const std::string& suite, const std::string& space,
             std::vector<CheckReport>& out) {
  if (suite == "hopf") {
    append(out, check_hopf_axioms(s.hopf));
  } else if (suite == "qt") {
    append(out, check_qt_axioms(s.hopf, qt_of(s)));
    append(out, check_r_counit_antipode(s.hopf, qt_of(s)));
  } else if (suite == "yb") {
    out.push_back(check_yang_baxter(s.hopf.alg, qt_of(s)));
  } else if (suite == "module") {
    append(out, check_module_algebra(s.space(space)));
  } else if (suite == "leibniz") {
    out.push_back(check_leibniz_second(s.braiding(space)));
    out.push_back(check_leibniz_first(s.braiding(space)));
  } else if (suite == "covariance") {
    out.push_back(check_covariance(s.braiding(space)));
  } else if (suite == "antisym") {
    out.push_back(check_braiding_inverse(s.braiding(space)));
    out.push_back(check_antisymmetry(s.braiding(space)));
  } else if (suite == "chi-yb") {
    out.push_back(check_chi_yang_baxter(s.braiding(space)));
  } else if (suite == "jacobi") {
    out.push_back(check_jacobi_operator(s.braiding(space)));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
}

}  // namespace

SuiteReport run_suite(const Session& s, const std::string& suite, const std::string& space) {
  Stopwatch timer;
  SuiteReport report;
  report.suite = suite;
  report.space = space;
  if (suite == "all") {
    for (const std::string& name : suite_names())
      if (name != "all") run_one(s, name, space, report.checks);
  } else {
    run_one(s, suite, space, report.checks);
  }
  report.seconds = timer.seconds();
  return report;
}

}  // namespace qcomm
