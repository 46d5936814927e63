#include <doctest.h>

#include "qcomm/braiding.hpp"
#include "qcomm/printing.hpp"
#include "qcomm/uqsl2.hpp"
#include "test_support.hpp"

using namespace qcomm;
using qcomm_test::shared_session;

namespace {

Element pb(const Algebra& a, std::vector<int> exps) {
  return Element::basis(a.dim, 1, a.index_of(exps));
}

std::string chi_str(const Braiding& b, std::vector<int> a_exps, std::vector<int> b_exps) {
  const Algebra& a = b.mod->alg;
  return print_element(a, braid(b, tensor(pb(a, a_exps), pb(a, b_exps))));
}

struct ToyFixture {
  HopfData hopf;
  ModuleAlgebra mod;
  QTStructure qt;
  Braiding braiding;
};

const ToyFixture& toy_fixture() {
  static const ToyFixture* t = [] {
    auto* f = new ToyFixture;
    f->hopf = build_cyclic_group_hopf(3);
    f->mod = build_toy_module(f->hopf, shared_session().plane->alg);
    f->qt = build_qt_structure(f->hopf.alg, unit_element(f->hopf.alg, 2));
    f->braiding = build_braiding(f->mod, f->qt);
    return f;
  }();
  return *t;
}

}  // namespace

TEST_CASE("coordinate braiding fixtures print canonically") {
  const Braiding& b = *shared_session().plane_braiding;
  CHECK(chi_str(b, {1, 0}, {1, 0}) == "q^2 * x (x) x");
  CHECK(chi_str(b, {0, 1}, {1, 0}) == "q * x (x) y");
  CHECK(chi_str(b, {1, 0}, {0, 1}) == "(q^2-1) x (x) y + q * y (x) x");
  CHECK(chi_str(b, {0, 1}, {0, 1}) == "q^2 * y (x) y");
}

TEST_CASE("derivative braiding fixtures print canonically") {
  const Braiding& b = *shared_session().extended_braiding;
  std::vector<int> x = {1, 0, 0, 0};
  std::vector<int> y = {0, 1, 0, 0};
  std::vector<int> dx = {0, 0, 1, 0};
  std::vector<int> dy = {0, 0, 0, 1};

  CHECK(chi_str(b, x, x) == "q^2 * x (x) x");
  CHECK(chi_str(b, y, x) == "q * x (x) y");
  CHECK(chi_str(b, x, y) == "(q^2-1) x (x) y + q * y (x) x");
  CHECK(chi_str(b, y, y) == "q^2 * y (x) y");
  CHECK(chi_str(b, dx, x) == "q * x (x) dx");
  CHECK(chi_str(b, dy, x) == "q^2 * x (x) dy");
  CHECK(chi_str(b, dx, y) == "q^2 * y (x) dx");
  CHECK(chi_str(b, dy, y) == "(q-1) x (x) dx + q * y (x) dy");
  CHECK(chi_str(b, x, dx) == "q * dx (x) x + (q^2-q) dy (x) y");
  CHECK(chi_str(b, y, dx) == "q^2 * dx (x) y");
  CHECK(chi_str(b, dx, dx) == "q^2 * dx (x) dx");
  CHECK(chi_str(b, dy, dx) == "q * dx (x) dy + (q^2-1) dy (x) dx");
  CHECK(chi_str(b, x, dy) == "q^2 * dy (x) x");
  CHECK(chi_str(b, y, dy) == "q * dy (x) y");
  CHECK(chi_str(b, dx, dy) == "q * dy (x) dx");
  CHECK(chi_str(b, dy, dy) == "q^2 * dy (x) dy");
}

TEST_CASE("commutator fixtures") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Braiding& be = *s.extended_braiding;
  const Algebra& p = s.plane->alg;
  const Algebra& e = s.extended->alg;

  CHECK(print_element(p, q_commutator(bp, pb(p, {1, 0}), pb(p, {1, 0}))) ==
        "(1-q^2) x^2");
  CHECK(print_element(p, q_commutator(bp, pb(p, {2, 0}), pb(p, {1, 0}))) == "1-q");
  CHECK(print_element(p, q_commutator(bp, pb(p, {1, 0}), pb(p, {0, 1}))) ==
        "(1-q^2) x y");
  CHECK(print_element(e, q_commutator(be, pb(e, {0, 0, 1, 0}), pb(e, {1, 0, 0, 0}))) ==
        "1 + (q^2-q) x dx + (q^2-1) y dy");
  CHECK(print_element(e, q_commutator(be, pb(e, {1, 0, 0, 0}), pb(e, {0, 0, 1, 0}))) ==
        "-q^2");
  CHECK(q_commutator(bp, unit_element(p), pb(p, {1, 1})).is_zero());
  CHECK(q_commutator(bp, pb(p, {1, 1}), unit_element(p)).is_zero());
}

TEST_CASE("inverse braiding undoes the braiding") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;

  Element xx = tensor(pb(p, {1, 0}), pb(p, {1, 0}));
  CHECK(braid_bar(bp, xx) == scale(xx, q_pow(*s.field, 1)));
  Element xy = tensor(pb(p, {1, 0}), pb(p, {0, 1}));
  CHECK(braid_bar(bp, braid(bp, xy)) == xy);
  CHECK(braid(bp, braid_bar(bp, xy)) == xy);
}

TEST_CASE("sigma components group by second slot ascending") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;
  auto q = [&](long k) { return q_pow(*s.field, k); };

  auto groups = sigma_decompose(bp, p.index_of({1, 0}), p.index_of({0, 1}));
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].second == p.index_of({0, 1}));
  CHECK(groups[0].first == scale(pb(p, {1, 0}), q(2) - Scalar(1)));
  CHECK(groups[1].second == p.index_of({1, 0}));
  CHECK(groups[1].first == scale(pb(p, {0, 1}), q(1)));

  auto diag = sigma_decompose(bp, p.index_of({1, 0}), p.index_of({1, 0}));
  REQUIRE(diag.size() == 1);
  CHECK(diag[0].second == p.index_of({1, 0}));
}

TEST_CASE("coordinate braiding passes every sweep") {
  const Braiding& bp = *shared_session().plane_braiding;
  for (const CheckReport& r :
       {check_braiding_inverse(bp), check_leibniz_second(bp), check_leibniz_first(bp),
        check_covariance(bp), check_antisymmetry(bp), check_chi_yang_baxter(bp)}) {
    INFO(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("derivative braiding passes the pairwise sweeps") {
  const Braiding& be = *shared_session().extended_braiding;
  for (const CheckReport& r : {check_braiding_inverse(be), check_covariance(be),
                               check_antisymmetry(be)}) {
    INFO(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("jacobi residual and obstruction operator agree on the witness") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;
  Element x = pb(p, {1, 0});

  CHECK(print_element(p, jacobi_residual(bp, x, x, x)) == "-3q^2");
  Element t = tensor(tensor(x, x), x);
  CHECK(jacobi_operator_image(bp, t) == scale(t, Scalar(3) * q_pow(*s.field, 2)));
  CHECK(jacobi_residual(bp, unit_element(p), x, pb(p, {0, 1})).is_zero());
}

TEST_CASE("obstruction vanishes exactly for the involutive braiding") {
  CheckReport rp = check_jacobi_operator(*shared_session().plane_braiding);
  INFO(rp.note);
  CHECK(rp.pass);

  const ToyFixture& t = toy_fixture();
  CHECK(is_triangular(t.qt));
  CheckReport rt = check_jacobi_operator(t.braiding);
  INFO(rt.note);
  CHECK(rt.pass);
  const Algebra& p = t.mod.alg;
  CHECK(jacobi_residual(t.braiding, pb(p, {1, 0}), pb(p, {0, 1}), pb(p, {1, 1}))
            .is_zero());
}

TEST_CASE("star conjugacy holds for the involutive companion") {
  const ToyFixture& t = toy_fixture();
  const Algebra& p = t.mod.alg;
  const CycloField& f = *shared_session().field;

  LinearMap star_h = identity_map(t.hopf.alg.dim);
  LinearMap star_a = LinearMap::make(p.dim, 1, 1);
  for (std::uint32_t i = 0; i < p.dim; ++i) {
    std::vector<int> exps = p.exponents(i);
    star_a.table[i] =
        scale(Element::basis(p.dim, 1, i), q_pow(f, 2L * exps[0] * exps[1]));
  }
  CheckReport r = check_star_conjugacy(t.braiding, star_h, star_a);
  INFO(r.note);
  CHECK(r.pass);
  CHECK(r.note == "R is real and anti-real");
}

TEST_CASE("star conjugacy is computed, not assumed, for the quantum group") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;
  const Algebra& h = s.hopf.alg;

  LinearMap star_h = LinearMap::make(h.dim, 1, 1);
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    std::vector<int> exps = h.exponents(i);
    star_h.table[i] = Element::basis(
        h.dim, 1, h.index_of({exps[2], (2 * exps[1]) % 3, exps[0]}));
  }
  LinearMap star_a = LinearMap::make(p.dim, 1, 1);
  for (std::uint32_t i = 0; i < p.dim; ++i) {
    std::vector<int> exps = p.exponents(i);
    star_a.table[i] = scale(Element::basis(p.dim, 1, i),
                            q_pow(*s.field, 2L * exps[0] * exps[1]));
  }
  CheckReport r = check_star_conjugacy(bp, star_h, star_a);
  CHECK_FALSE(r.pass);
  CHECK(r.note.find("neither real nor anti-real") != std::string::npos);
}

TEST_CASE("a non-involutive star table is rejected") {
  const ToyFixture& t = toy_fixture();
  const Algebra& p = t.mod.alg;
  LinearMap star_h = identity_map(t.hopf.alg.dim);
  LinearMap bad = LinearMap::make(p.dim, 1, 1);
  for (std::uint32_t i = 0; i < p.dim; ++i) bad.table[i] = unit_element(p);
  CHECK_THROWS_AS(check_star_conjugacy(t.braiding, star_h, bad), ConstructionError);
}

TEST_CASE("structure constants export over the whole coordinate algebra") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;

  std::vector<std::uint32_t> full;
  for (std::uint32_t i = 0; i < p.dim; ++i) full.push_back(i);
  QLieData d = export_qlie(bp, full, 3);
  CHECK(d.order == 3);
  CHECK(d.closed);
  CHECK(d.labels.size() == p.dim);
  auto it = d.c.find(
      {(int)p.index_of({1, 0}), (int)p.index_of({1, 0}), (int)p.index_of({2, 0})});
  REQUIRE(it != d.c.end());
  CHECK(it->second == Scalar(1) - q_pow(*s.field, 2));
  for (const CheckReport& r : check_qlie_export(bp, d)) {
    INFO(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("coordinate span is braided-stable but not commutator-closed") {
  const Session& s = shared_session();
  const Braiding& bp = *s.plane_braiding;
  const Algebra& p = s.plane->alg;

  QLieData d = export_qlie(bp, {p.index_of({1, 0}), p.index_of({0, 1})}, 3);
  CHECK_FALSE(d.closed);
  for (const CheckReport& r : check_qlie_export(bp, d)) {
    INFO(r.check);
    CHECK(r.pass);
  }

  QLieData unit_only = export_qlie(bp, {p.unit}, 3);
  CHECK(unit_only.closed);
  CHECK(unit_only.c.empty());
}

TEST_CASE("a braided-unstable span fails the export") {
  const Session& s = shared_session();
  const Algebra& p = s.plane->alg;
  CHECK_THROWS_AS(export_qlie(*s.plane_braiding,
                              {p.index_of({0, 1}), p.index_of({2, 0})}, 3),
                  ConstructionError);
}

TEST_CASE("one corrupted braiding entry is localized by the sweeps") {
  const Session& s = shared_session();
  const Algebra& p = s.plane->alg;
  Braiding bad = *s.plane_braiding;
  std::uint64_t k = pack2(p.dim, p.index_of({1, 0}), p.index_of({0, 1}));
  bad.chi.table[k] = scale(bad.chi.table[k], q_pow(*s.field, 1));

  CheckReport inv = check_braiding_inverse(bad);
  CHECK_FALSE(inv.pass);
  REQUIRE(inv.counterexample.has_value());
  CHECK(inv.counterexample->inputs[0] == "x^0 y^1");
  CHECK(inv.counterexample->inputs[1] == "x^1 y^0");
  CHECK(inv.counterexample->lhs != inv.counterexample->rhs);

  CheckReport anti = check_antisymmetry(bad);
  CHECK_FALSE(anti.pass);
  CHECK(anti.counterexample.has_value());
}
