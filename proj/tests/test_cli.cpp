#include <doctest.h>

#include <sstream>

#include "qcomm/cli.hpp"
#include "qcomm/json_io.hpp"
#include "test_support.hpp"

using namespace qcomm;
using qcomm_test::shared_session;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval infers the extension from derivative generators") {
  CliResult r = cli({"eval", "[x, dx]"});
  CHECK(r.code == 0);
  CHECK(r.out == "-q^2\n");

  CliResult joined = cli({"eval", "[x,", "dx]"});
  CHECK(joined.code == 0);
  CHECK(joined.out == r.out);
}

TEST_CASE("pair commands print canonical forms") {
  CliResult chi = cli({"chi", "y", "x"});
  CHECK(chi.code == 0);
  CHECK(chi.out == "q * x (x) y\n");

  CliResult comm = cli({"comm", "x", "x"});
  CHECK(comm.code == 0);
  CHECK(comm.out == "(1-q^2) x^2\n");

  CliResult act = cli({"act", "K", "x"});
  CHECK(act.code == 0);
  CHECK(act.out == "q * x\n");
}

TEST_CASE("an explicit space pins evaluation") {
  CliResult pinned = cli({"--space", "A0", "eval", "dx"});
  CHECK(pinned.code == 2);
  CHECK_FALSE(pinned.err.empty());

  CliResult ext = cli({"--space", "E", "eval", "dx dx"});
  CHECK(ext.code == 0);
  CHECK(ext.out == "dx^2\n");
}

TEST_CASE("usage failures exit with the parse code") {
  CHECK(cli({"eval", "[x, K]"}).code == 2);
  CHECK(cli({"eval", "1/0"}).code == 2);
  CHECK(cli({"verify", "bogus"}).code == 2);
  CHECK(cli({"--nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--order", "4", "build"}).code == 2);
  CHECK(cli({"export", "widget"}).code == 2);
}

TEST_CASE("verify prints one line per check and a summary") {
  CliResult r = cli({"verify", "jacobi"});
  CHECK(r.code == 0);
  CHECK(r.out.find("suite jacobi on A0: 1 checks, all pass") != std::string::npos);
  CHECK(r.out.find("note:") != std::string::npos);
}

TEST_CASE("json output is machine readable") {
  CliResult ev = cli({"--json", "eval", "q^2-q"});
  CHECK(ev.code == 0);
  Json j = Json::parse(ev.out);
  CHECK(j.at("sort") == "scalar");
  CHECK(j.at("canonical") == "q^2-q");

  CliResult ver = cli({"--json", "verify", "antisym"});
  CHECK(ver.code == 0);
  Json v = Json::parse(ver.out);
  CHECK(v.at("suite") == "antisym");
  CHECK(v.at("space") == "A0");
  CHECK(v.at("status") == "pass");
  CHECK(v.at("checks").size() == 2u);
}

TEST_CASE("hopf export round trips through a file") {
  const std::string path = "/tmp/qcomm_cli_hopf.json";
  CliResult r = cli({"export", "hopf", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  Json j = read_json_file(path);
  HopfData back = hopf_from_json(j, *shared_session().field);
  CHECK(back.alg.mul_table == shared_session().hopf.alg.mul_table);
  auto r2 = r_matrix_from_json(j, back.alg, *shared_session().field);
  REQUIRE(r2.has_value());
  CHECK(*r2 == shared_session().qt->R);
}

TEST_CASE("module and subspace exports") {
  CliResult mod = cli({"export", "module"});
  CHECK(mod.code == 0);
  CHECK(Json::parse(mod.out).at("action").size() == 27u * 9u);

  CliResult span = cli({"--space", "x,y", "export", "qlie"});
  CHECK(span.code == 0);
  CHECK(Json::parse(span.out).at("closed") == false);

  CHECK(cli({"--space", "x,q", "export", "qlie"}).code == 2);
}

TEST_CASE("unwritable output paths exit with the failure code") {
  CHECK(cli({"eval", "x", "--out", "/nonexistent_qcomm_dir/out.txt"}).code == 1);
}

TEST_CASE("build prints the session dimensions") {
  CliResult r = cli({"build"});
  CHECK(r.code == 0);
  CHECK(r.out.find("hopf dim 27\n") != std::string::npos);
  CHECK(r.out.find("A0 dim 9\n") != std::string::npos);
  CHECK(r.out.find("E dim") == std::string::npos);
}

TEST_CASE("sessions away from order three support only the hopf layer") {
  const Session& s5 = qcomm_test::shared_session5();
  CHECK(s5.hopf.alg.dim == 125);
  CHECK_FALSE(s5.qt.has_value());
  CHECK_THROWS_AS(s5.space("A0"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(s5, "yb", "A0"), std::invalid_argument);
  CHECK_NOTHROW(run_suite(s5, "hopf", "A0"));
}

TEST_CASE("a session built without the extension rejects E") {
  auto s = build_session(3, false);
  CHECK(s->plane.has_value());
  CHECK_FALSE(s->extended.has_value());
  CHECK_THROWS_AS(s->braiding("E"), std::invalid_argument);
  CHECK_THROWS_AS(s->space("Q2"), std::invalid_argument);
}
