#include <doctest.h>

#include "qcomm/element.hpp"

using namespace qcomm;

namespace {

const CycloField& field() { return CycloField::of_order(3); }

Element combo(std::uint32_t dim, std::initializer_list<std::pair<std::uint64_t, Scalar>> ts) {
  Element e = Element::zero(dim);
  for (const auto& [k, c] : ts) e.add_term(k, c);
  return e;
}

}  // namespace

TEST_CASE("terms stay sorted and free of zeros") {
  Scalar q = Scalar::q(field());
  Element a = combo(5, {{3, Scalar(2)}, {1, q}});
  CHECK(a.terms.size() == 2);
  CHECK(a.terms[0].first == 1);
  CHECK(a.terms[1].first == 3);
  a.add_term(1, -q);
  CHECK(a.terms.size() == 1);
  CHECK(a.coeff(1).is_zero());
  CHECK(a.coeff(3) == Scalar(2));
  CHECK(sub(a, a).is_zero());
}

TEST_CASE("insertion order does not matter for equality") {
  Scalar q = Scalar::q(field());
  Element a = combo(5, {{0, Scalar(1)}, {4, q}});
  Element b = combo(5, {{4, q}, {0, Scalar(1)}});
  CHECK(a == b);
  CHECK(a != scale(b, q));
}

TEST_CASE("linear operations") {
  Scalar q = Scalar::q(field());
  Element a = combo(4, {{0, Scalar(1)}, {2, q}});
  Element b = combo(4, {{2, Scalar(1)}});
  CHECK(add(a, b).coeff(2) == q + Scalar(1));
  CHECK(sub(a, b).coeff(2) == q - Scalar(1));
  CHECK(negate(a) == scale(a, Scalar(-1)));
  CHECK(conj_coeffs(a).coeff(2) == q.conj());
  CHECK(add(a, negate(a)).is_zero());
}

TEST_CASE("tensor packs slots first-major") {
  Element x = Element::basis(3, 1, 1);
  Element y = Element::basis(3, 1, 2);
  Element t = tensor(x, y);
  CHECK(t.arity == 2);
  REQUIRE(t.terms.size() == 1);
  CHECK(t.terms[0].first == pack2(3, 1, 2));
  CHECK(tau(t) == tensor(y, x));
  Element t3 = tensor(t, x);
  CHECK(t3.arity == 3);
  CHECK(t3.terms[0].first == pack3(3, 1, 2, 1));
  auto slots = unpack(t3, t3.terms[0].first);
  CHECK(slots[0] == 1);
  CHECK(slots[1] == 2);
  CHECK(slots[2] == 1);
}

TEST_CASE("tensor is bilinear") {
  Scalar q = Scalar::q(field());
  Element a = combo(3, {{0, Scalar(1)}, {1, q}});
  Element b = combo(3, {{2, Scalar(2)}});
  Element lhs = tensor(a, b);
  Element rhs = add(tensor(Element::basis(3, 1, 0), b),
                    tensor(scale(Element::basis(3, 1, 1), q), b));
  CHECK(lhs == rhs);
}

TEST_CASE("maps apply slotwise") {
  const std::uint32_t dim = 3;
  LinearMap cycle = LinearMap::make(dim, 1, 1);
  Scalar q = Scalar::q(field());
  for (std::uint32_t i = 0; i < dim; ++i)
    cycle.table[i] = scale(Element::basis(dim, 1, (i + 1) % dim), q);
  Element v = Element::basis(dim, 1, 0);
  CHECK(apply(cycle, v) == scale(Element::basis(dim, 1, 1), q));

  Element t = tensor(tensor(v, Element::basis(dim, 1, 1)), Element::basis(dim, 1, 2));
  Element mid = apply_at(cycle, t, 1);
  REQUIRE(mid.terms.size() == 1);
  auto slots = unpack(mid, mid.terms[0].first);
  CHECK(slots[0] == 0);
  CHECK(slots[1] == 2);
  CHECK(slots[2] == 2);
  CHECK(mid.terms[0].second == q);
}

TEST_CASE("flip squares to the identity") {
  const std::uint32_t dim = 4;
  LinearMap flip = flip_map(dim);
  LinearMap twice = compose(flip, flip);
  LinearMap id = identity_map(dim, 2);
  CHECK(twice.table == id.table);
}

TEST_CASE("composition against tensor products of maps") {
  const std::uint32_t dim = 2;
  Scalar q = Scalar::q(field());
  LinearMap a = LinearMap::make(dim, 1, 1);
  a.table[0] = Element::basis(dim, 1, 1);
  a.table[1] = scale(Element::basis(dim, 1, 0), q);
  LinearMap b = LinearMap::make(dim, 1, 1);
  b.table[0] = add(Element::basis(dim, 1, 0), Element::basis(dim, 1, 1));
  b.table[1] = Element::zero(dim);
  LinearMap ab = map_tensor(a, b);
  Element t = tensor(Element::basis(dim, 1, 1), Element::basis(dim, 1, 0));
  CHECK(apply(ab, t) == tensor(apply(a, Element::basis(dim, 1, 1)),
                               apply(b, Element::basis(dim, 1, 0))));
  LinearMap ba = compose(a, b);
  CHECK(apply(ba, Element::basis(dim, 1, 0)) == apply(a, apply(b, Element::basis(dim, 1, 0))));
}
