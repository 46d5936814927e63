#include <doctest.h>

#include "qcomm/json_io.hpp"
#include "qcomm/uqsl2.hpp"
#include "test_support.hpp"

using namespace qcomm;
using qcomm_test::shared_session;

TEST_CASE("scalar serialization round trips at orders three and five") {
  const CycloField& f3 = *shared_session().field;
  Scalar s = Scalar(Rational(2, 3)) * q_pow(f3, 1) + Scalar(Rational(-1, 6));
  Json j = scalar_to_json(s, f3);
  CHECK(j.at("den").get<std::int64_t>() == 6);
  CHECK(scalar_from_json(j, f3) == s);
  CHECK(scalar_to_json(Scalar(1), f3) == scalar_to_json(Scalar(1).bind(f3), f3));

  const CycloField& f5 = CycloField::of_order(5);
  Scalar t = q_pow(f5, 3) - Scalar(Rational(1, 2)) * q_pow(f5, 1);
  Json j5 = scalar_to_json(t, f5);
  CHECK(j5.at("coeffs").size() == 4u);
  CHECK(scalar_from_json(j5, f5) == t);
}

TEST_CASE("hopf serialization round trips with its R-matrix") {
  const Session& s = shared_session();
  const CycloField& f = *s.field;
  const HopfData& h = s.hopf;

  Json hj = hopf_to_json(h, f, &s.qt->R);
  HopfData h2 = hopf_from_json(hj, f);
  CHECK(h2.alg.dim == h.alg.dim);
  CHECK(h2.alg.mul_table == h.alg.mul_table);
  CHECK(h2.coproduct.table == h.coproduct.table);
  CHECK(h2.counit == h.counit);
  CHECK(h2.antipode.table == h.antipode.table);

  auto r2 = r_matrix_from_json(hj, h2.alg, f);
  REQUIRE(r2.has_value());
  CHECK(*r2 == s.qt->R);
  CHECK(json_bytes(hopf_to_json(h2, f, &*r2)) == json_bytes(hj));

  Json bare = hopf_to_json(h, f);
  CHECK_FALSE(r_matrix_from_json(bare, h.alg, f).has_value());
}

TEST_CASE("module serialization covers the whole action table") {
  const Session& s = shared_session();
  const CycloField& f = *s.field;
  Json mj = module_to_json(*s.plane, f);
  CHECK(mj.at("action").size() == 27u * 9u);

  const Algebra& p = s.plane->alg;
  const Algebra& h = s.hopf.alg;
  std::string key = std::to_string(h.index_of({0, 1, 0})) + "," +
                    std::to_string(p.index_of({1, 0}));
  Element want = scale(Element::basis(p.dim, 1, p.index_of({1, 0})), q_pow(f, 1));
  CHECK(mj.at("action").at(key) == element_to_json(want, p, f));
}

TEST_CASE("structure-constant export serializes with its closure flag") {
  const Session& s = shared_session();
  const CycloField& f = *s.field;
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;

  std::vector<std::uint32_t> all(p.dim);
  for (std::uint32_t i = 0; i < p.dim; ++i) all[i] = i;
  Json full = qlie_to_json(export_qlie(bp, all, 3), f);
  CHECK(full.at("N") == 3);
  CHECK(full.at("closed") == true);
  CHECK(full.at("basis").size() == 9u);

  Json span = qlie_to_json(
      export_qlie(bp, {p.index_of({1, 0}), p.index_of({0, 1})}, 3), f);
  CHECK(span.at("closed") == false);
  CHECK(span.at("sigma").size() == 5u);

  write_json_file("/tmp/qcomm_qlie_test.json", span);
  CHECK(json_bytes(read_json_file("/tmp/qcomm_qlie_test.json")) == json_bytes(span));
}

TEST_CASE("reports serialize without timing noise") {
  CheckReport rep = CheckReport::failed(
      "demo", Counterexample{{"x^1 y^0", "x^0 y^1"}, "1", "q * 1"}, "note text");
  rep.seconds = 1.5;
  Json j = report_to_json(rep);
  CHECK(j.at("check") == "demo");
  CHECK(j.at("status") == "fail");
  CHECK(j.at("note") == "note text");
  CHECK(j.at("counterexample").at("inputs").size() == 2u);
  CHECK_FALSE(j.contains("seconds"));

  Json ok = report_to_json(CheckReport::ok("quiet"));
  CHECK_FALSE(ok.contains("note"));
  CHECK_FALSE(ok.contains("counterexample"));
}

TEST_CASE("imports reject structural damage") {
  const Session& s = shared_session();
  const CycloField& f = *s.field;
  HopfData toy = build_cyclic_group_hopf(3);
  Json tj = hopf_to_json(toy, f);

  SUBCASE("missing multiplication table") {
    Json bad = tj;
    bad.erase("mul");
    CHECK_THROWS_AS(algebra_from_json(bad, f), Json::out_of_range);
  }
  SUBCASE("foreign basis label") {
    Json bad = tj;
    bad["basis"][1] = "z^9";
    CHECK_THROWS_AS(algebra_from_json(bad, f), ConstructionError);
  }
  SUBCASE("non-associative multiplication entry") {
    Json bad = tj;
    Json two_terms = Json::array();
    two_terms.push_back({{"label", toy.alg.label(0)}, {"scalar", scalar_to_json(Scalar(1), f)}});
    two_terms.push_back({{"label", toy.alg.label(1)}, {"scalar", scalar_to_json(Scalar(1), f)}});
    bad["mul"]["1,1"] = two_terms;
    CHECK_THROWS_AS(algebra_from_json(bad, f), ConstructionError);
  }
  SUBCASE("short counit table") {
    Json bad = tj;
    bad["counit"].erase(2);
    CHECK_THROWS_AS(hopf_from_json(bad, f), ConstructionError);
  }
  SUBCASE("broken coproduct entry") {
    Json bad = tj;
    bad["coproduct"]["1"] = element_to_json(
        tensor(unit_element(toy.alg), unit_element(toy.alg)), toy.alg, f);
    CHECK_THROWS_AS(hopf_from_json(bad, f), ConstructionError);
  }
}
