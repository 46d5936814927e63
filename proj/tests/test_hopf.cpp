#include <doctest.h>

#include "qcomm/uqsl2.hpp"

using namespace qcomm;

namespace {

const HopfData& toy() {
  static HopfData h = build_cyclic_group_hopf(3);
  return h;
}

}  // namespace

TEST_CASE("group algebra is a hopf algebra with grouplike generator") {
  const HopfData& h = toy();
  CHECK(h.alg.dim == 3);
  for (const CheckReport& r : check_hopf_axioms(h)) {
    INFO(r.check);
    CHECK(r.pass);
  }
  std::uint32_t g = h.alg.generator(0);
  CHECK(h.coproduct.table[g] == tensor(Element::basis(3, 1, g), Element::basis(3, 1, g)));
  CHECK(counit_of(h, Element::basis(3, 1, g)) == Scalar(1));
  Element sg = h.antipode.table[g];
  CHECK(mul(h.alg, sg, Element::basis(3, 1, g)) == unit_element(h.alg));
}

TEST_CASE("counit and coproduct extend linearly") {
  const HopfData& h = toy();
  Scalar q = Scalar::q(CycloField::of_order(3));
  Element e = add(scale(Element::basis(3, 1, 1), q), Element::basis(3, 1, 2));
  CHECK(counit_of(h, e) == q + Scalar(1));
  Element expanded = coproduct_slot(h, tensor(e, Element::basis(3, 1, 0)), 0);
  CHECK(expanded.arity == 3);
  CHECK(expanded ==
        add(scale(Element::basis(3, 3, pack3(3, 1, 1, 0)), q),
            Element::basis(3, 3, pack3(3, 2, 2, 0))));
}

TEST_CASE("identity r-matrix is triangular and passes every gate") {
  const HopfData& h = toy();
  QTStructure qt = build_qt_structure(h.alg, unit_element(h.alg, 2));
  CHECK(qt.Rinv == qt.R);
  CHECK(qt.Rbar == qt.R);
  CHECK(is_triangular(qt));
  for (const CheckReport& r : check_qt_axioms(h, qt)) {
    INFO(r.check);
    CHECK(r.pass);
  }
  CHECK(check_yang_baxter(h.alg, qt).pass);
  for (const CheckReport& r : check_r_counit_antipode(h, qt)) {
    INFO(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("a diagonal r-matrix on the group algebra") {
  const HopfData& h = toy();
  const CycloField& f = CycloField::of_order(3);
  // R = (1/3) sum q^(jk) g^j (x) g^k, the standard abelian pairing.
  Element r = Element::zero(3, 2);
  for (std::uint32_t j = 0; j < 3; ++j)
    for (std::uint32_t k = 0; k < 3; ++k)
      r.add_term(pack2(3, j, k), Scalar::q(f, (long)(j * k)) * Scalar(Rational(1, 3)));
  QTStructure qt = build_qt_structure(h.alg, r);
  for (const CheckReport& rep : check_qt_axioms(h, qt)) {
    INFO(rep.check);
    CHECK(rep.pass);
  }
  CHECK(check_yang_baxter(h.alg, qt).pass);
}

TEST_CASE("singular r-matrix is rejected") {
  const HopfData& h = toy();
  CHECK_THROWS_AS(build_qt_structure(h.alg, Element::zero(3, 2)), ConstructionError);
  Element sum = Element::zero(3);
  for (std::uint32_t i = 0; i < 3; ++i) sum.add_term(i, Scalar(1));
  Element degenerate = tensor(sum, unit_element(h.alg));
  CHECK_THROWS_AS(build_qt_structure(h.alg, degenerate), ConstructionError);
}

TEST_CASE("corrupted coproduct is caught with a counterexample") {
  HopfData h = toy();
  Scalar q = Scalar::q(CycloField::of_order(3));
  std::uint32_t g = h.alg.generator(0);
  h.coproduct.table[g] = scale(h.coproduct.table[g], q);
  bool failed = false;
  for (const CheckReport& r : check_hopf_axioms(h)) {
    if (r.pass) continue;
    failed = true;
    CHECK(r.counterexample.has_value());
  }
  CHECK(failed);
}

TEST_CASE("embed_pair pads the free slot with the unit") {
  const HopfData& h = toy();
  Element r = tensor(Element::basis(3, 1, 1), Element::basis(3, 1, 2));
  Element emb = embed_pair(h.alg, r, 0, 2);
  REQUIRE(emb.terms.size() == 1);
  auto slots = unpack(emb, emb.terms[0].first);
  CHECK(slots[0] == 1);
  CHECK(slots[1] == h.alg.unit);
  CHECK(slots[2] == 2);
}
