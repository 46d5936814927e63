#include <doctest.h>

#include "qcomm/printing.hpp"
#include "test_support.hpp"

using namespace qcomm;
using qcomm_test::shared_session;

namespace {

Element gen(const Algebra& a, const char* name) {
  for (std::size_t f = 0; f < a.factor_names.size(); ++f)
    if (a.factor_names[f] == name) return Element::basis(a.dim, 1, a.generator((int)f));
  FAIL("no generator ", name);
  return Element::zero(a.dim);
}

}  // namespace

TEST_CASE("pbw basis of the order-3 quantum group") {
  const HopfData& h = shared_session().hopf;
  CHECK(h.alg.dim == 27);
  CHECK(h.alg.factor_names == std::vector<std::string>{"Xm", "K", "Xp"});
  CHECK(print_monomial(h.alg, h.alg.unit) == "1");
  CHECK(h.alg.label(h.alg.index_of({1, 2, 1})) == "Xm^1 K^2 Xp^1");
}

TEST_CASE("defining relations") {
  const HopfData& h = shared_session().hopf;
  const CycloField& f = *shared_session().field;
  Scalar q = Scalar::q(f);
  Element K = gen(h.alg, "K");
  Element Xp = gen(h.alg, "Xp");
  Element Xm = gen(h.alg, "Xm");

  CHECK(mul(h.alg, K, Xp) == scale(mul(h.alg, Xp, K), q * q));
  CHECK(mul(h.alg, K, Xm) == scale(mul(h.alg, Xm, K), q));

  Element K2 = mul(h.alg, K, K);
  Element lhs = sub(mul(h.alg, Xp, Xm), mul(h.alg, Xm, Xp));
  Element rhs = scale(sub(K, K2), (q - q.conj()).inv());
  CHECK(lhs == rhs);

  Element Xp3 = mul(h.alg, mul(h.alg, Xp, Xp), Xp);
  CHECK(Xp3.is_zero());
  Element K3 = mul(h.alg, K2, K);
  CHECK(K3 == unit_element(h.alg));
}

TEST_CASE("coproduct, counit and antipode on the generators") {
  const HopfData& h = shared_session().hopf;
  const Algebra& a = h.alg;
  Element K = gen(a, "K");
  Element Xp = gen(a, "Xp");
  Element Xm = gen(a, "Xm");
  Element one = unit_element(a);
  Element K2 = mul(a, K, K);

  CHECK(coproduct_slot(h, K, 0) == tensor(K, K));
  CHECK(coproduct_slot(h, Xp, 0) == add(tensor(Xp, one), tensor(K, Xp)));
  CHECK(coproduct_slot(h, Xm, 0) == add(tensor(Xm, K2), tensor(one, Xm)));

  CHECK(counit_of(h, K) == Scalar(1));
  CHECK(counit_of(h, Xp) == Scalar(0));
  CHECK(counit_of(h, Xm) == Scalar(0));

  CHECK(apply(h.antipode, K) == K2);
  CHECK(apply(h.antipode, Xp) == negate(mul(a, K2, Xp)));
  CHECK(apply(h.antipode, Xm) == negate(mul(a, Xm, K)));
}

TEST_CASE("standard r-matrix is quasi-triangular but not triangular") {
  const Session& s = shared_session();
  REQUIRE(s.qt.has_value());
  CHECK_FALSE(s.qt->R.is_zero());
  CHECK_FALSE(is_triangular(*s.qt));
  Element prod = mul_tensor(s.hopf.alg, s.qt->R, s.qt->Rinv);
  CHECK(prod == unit_element(s.hopf.alg, 2));
  CHECK(s.qt->Rbar == tau(s.qt->Rinv));
}

TEST_CASE("order five passes the hopf gates") {
  const HopfData& h5 = qcomm_test::shared_session5().hopf;
  CHECK(h5.alg.dim == 125);
  const CycloField& f5 = CycloField::of_order(5);
  Scalar q5 = Scalar::q(f5);
  Element K = gen(h5.alg, "K");
  Element Xp = gen(h5.alg, "Xp");
  CHECK(mul(h5.alg, K, Xp) == scale(mul(h5.alg, Xp, K), q5 * q5));
  Element Kpow = unit_element(h5.alg);
  for (int i = 0; i < 5; ++i) Kpow = mul(h5.alg, Kpow, K);
  CHECK(Kpow == unit_element(h5.alg));
}

TEST_CASE("unsupported orders are rejected") {
  CHECK_THROWS_AS(build_uqsl2(4), std::invalid_argument);
  CHECK_THROWS_AS(build_uqsl2(1), std::invalid_argument);
  CHECK_THROWS_AS(build_standard_r(qcomm_test::shared_session5().hopf),
                  std::invalid_argument);
}
