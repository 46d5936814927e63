// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <array>
#include <cstdio>
#include <ctime>
#include <map>
#include <string>
#include <vector>

#include "qcomm/printing.hpp"
#include "qcomm/session.hpp"

using namespace qcomm;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::printf("%s criterion-%d %s\n", ok ? "PASS" : "FAIL", n, what.c_str());
  if (!ok) ++failures;
}

Element basis1(const Algebra& a, std::vector<int> exps) {
  return Element::basis(a.dim, 1, a.index_of(exps));
}

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const CheckReport& r : rs)
    if (!r.pass) return false;
  return true;
}

std::string chi_str(const Braiding& b, const Element& u, const Element& v) {
  return print_element(b.mod->alg, braid(b, tensor(u, v)));
}

/// m(m (x) 1) applied to an arity-3 element.
Element collapse3(const Algebra& a, const Element& t) {
  Element out = Element::zero(a.dim, 1);
  for (const auto& [key, c] : t.terms) {
    auto s = unpack_key(key, a.dim, 3);
    Element prod = mul(a, mul(a, Element::basis(a.dim, 1, s[0]),
                              Element::basis(a.dim, 1, s[1])),
                       Element::basis(a.dim, 1, s[2]));
    out = add(out, scale(prod, c));
  }
  return out;
}

/// Normal-ordering rewriter over words in x, y, dx, dy, driven only by
/// the pairwise exchange rules and the power relations. It never touches
/// the algebra's multiplication table, so agreement with it is a
/// two-path result.
struct Rewriter {
  const CycloField& f;
  Scalar q1, q2;

  explicit Rewriter(const CycloField& field)
      : f(field), q1(q_pow(field, 1)), q2(q_pow(field, 2)) {}

  using Word = std::vector<int>;

  /// Replacement words with coefficients for an adjacent pair (a, b)
  /// with a > b in the order x < y < dx < dy.
  std::vector<std::pair<Word, Scalar>> exchange(int a, int b) const {
    if (a == 1 && b == 0) return {{{0, 1}, q2}};
    if (a == 2 && b == 0) return {{{}, Scalar(1)}, {{0, 2}, q2}, {{1, 3}, q2 - Scalar(1)}};
    if (a == 3 && b == 0) return {{{0, 3}, q1}};
    if (a == 2 && b == 1) return {{{1, 2}, q1}};
    if (a == 3 && b == 1) return {{{}, Scalar(1)}, {{1, 3}, q2}};
    return {{{2, 3}, q1}};
  }

  /// Fully reduces word * coeff into exponent-keyed terms. Returns false
  /// if the rewriting fails to terminate within the step budget.
  bool normalize(Word word, const Scalar& coeff,
                 std::map<std::array<int, 4>, Scalar>& acc) const {
    std::vector<std::pair<Word, Scalar>> work{{std::move(word), coeff}};
    long steps = 0;
    while (!work.empty()) {
      if (++steps > 200000) return false;
      auto [w, c] = std::move(work.back());
      work.pop_back();
      std::size_t i = 0;
      while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
      if (i + 1 >= w.size()) {
        std::array<int, 4> e = {0, 0, 0, 0};
        for (int g : w) ++e[g];
        if (e[2] >= 3 || e[3] >= 3) continue;
        e[0] %= 3;
        e[1] %= 3;
        auto [it, fresh] = acc.emplace(e, c);
        if (!fresh) it->second += c;
        continue;
      }
      for (const auto& [seg, sc] : exchange(w[i], w[i + 1])) {
        Word next(w.begin(), w.begin() + i);
        next.insert(next.end(), seg.begin(), seg.end());
        next.insert(next.end(), w.begin() + i + 2, w.end());
        work.emplace_back(std::move(next), c * sc);
      }
    }
    return true;
  }
};

}  // namespace

int main() {
  auto session = build_session(3, true);
  const Session& s = *session;
  const CycloField& f = *s.field;
  const Algebra& h = s.hopf.alg;
  const Algebra& p = s.plane->alg;
  const Algebra& e = s.extended->alg;
  const Braiding& bp = *s.plane_braiding;
  const Braiding& be = *s.extended_braiding;
  auto q = [&](long k) { return q_pow(f, k); };
  char buf[160];

  HopfData toy = build_cyclic_group_hopf(3);
  ModuleAlgebra toy_mod = build_toy_module(toy, p);
  QTStructure toy_qt = build_qt_structure(toy.alg, unit_element(toy.alg, 2));
  Braiding bt = build_braiding(toy_mod, toy_qt);

  // 1: R-matrix laws: intertwining on every basis monomial, both fusion
  // expansions, Yang-Baxter, counit legs, antipode legs.
  {
    Stopwatch w;
    std::vector<CheckReport> rs = check_qt_axioms(s.hopf, *s.qt);
    rs.push_back(check_yang_baxter(h, *s.qt));
    for (CheckReport& r : check_r_counit_antipode(s.hopf, *s.qt)) rs.push_back(r);
    double secs = w.seconds();
    std::snprintf(buf, sizeof buf, "r-matrix laws: %zu checks in %.1fs wall", rs.size(),
                  secs);
    line(1, all_pass(rs) && secs < 60.0, buf);
  }

  // 2: the sixteen basis braidings print byte-exactly, coordinate pairs
  // in both spaces.
  {
    Element px = basis1(p, {1, 0});
    Element py = basis1(p, {0, 1});
    Element ex = basis1(e, {1, 0, 0, 0});
    Element ey = basis1(e, {0, 1, 0, 0});
    Element edx = basis1(e, {0, 0, 1, 0});
    Element edy = basis1(e, {0, 0, 0, 1});
    struct Fix {
      std::string got;
      const char* want;
    };
    std::vector<Fix> fixes = {
        {chi_str(bp, px, px), "q^2 * x (x) x"},
        {chi_str(bp, py, px), "q * x (x) y"},
        {chi_str(bp, px, py), "(q^2-1) x (x) y + q * y (x) x"},
        {chi_str(bp, py, py), "q^2 * y (x) y"},
        {chi_str(be, ex, ex), "q^2 * x (x) x"},
        {chi_str(be, ey, ex), "q * x (x) y"},
        {chi_str(be, ex, ey), "(q^2-1) x (x) y + q * y (x) x"},
        {chi_str(be, ey, ey), "q^2 * y (x) y"},
        {chi_str(be, edx, ex), "q * x (x) dx"},
        {chi_str(be, edy, ex), "q^2 * x (x) dy"},
        {chi_str(be, edx, ey), "q^2 * y (x) dx"},
        {chi_str(be, edy, ey), "(q-1) x (x) dx + q * y (x) dy"},
        {chi_str(be, ex, edx), "q * dx (x) x + (q^2-q) dy (x) y"},
        {chi_str(be, ey, edx), "q^2 * dx (x) y"},
        {chi_str(be, edx, edx), "q^2 * dx (x) dx"},
        {chi_str(be, edy, edx), "q * dx (x) dy + (q^2-1) dy (x) dx"},
        {chi_str(be, ex, edy), "q^2 * dy (x) x"},
        {chi_str(be, ey, edy), "q * dy (x) y"},
        {chi_str(be, edx, edy), "q * dy (x) dx"},
        {chi_str(be, edy, edy), "q^2 * dy (x) dy"},
    };
    int bad = 0;
    for (const Fix& fx : fixes)
      if (fx.got != fx.want) ++bad;
    std::snprintf(buf, sizeof buf, "braiding table fixtures: %zu printed, %d mismatched",
                  fixes.size(), bad);
    line(2, bad == 0, buf);
  }

  // 3: commutator fixtures.
  {
    bool ok =
        print_element(p, q_commutator(bp, basis1(p, {1, 0}), basis1(p, {1, 0}))) ==
            "(1-q^2) x^2" &&
        print_element(e, q_commutator(be, basis1(e, {0, 0, 1, 0}),
                                      basis1(e, {1, 0, 0, 0}))) ==
            "1 + (q^2-q) x dx + (q^2-1) y dy" &&
        print_element(e, q_commutator(be, basis1(e, {1, 0, 0, 0}),
                                      basis1(e, {0, 0, 1, 0}))) == "-q^2";
    line(3, ok, "commutator fixtures: [x,x], [dx,x], [x,dx]");
  }

  // 4: product rules in both slots, every basis triple of both spaces.
  {
    std::clock_t c0 = std::clock();
    Stopwatch w;
    std::vector<CheckReport> rs = {check_leibniz_second(bp), check_leibniz_first(bp),
                                   check_leibniz_second(be), check_leibniz_first(be)};
    double cpu = double(std::clock() - c0) / CLOCKS_PER_SEC;
    std::snprintf(buf, sizeof buf,
                  "product rules on 9^3 + 81^3 triples: %.1fs cpu, %.1fs wall", cpu,
                  w.seconds());
    line(4, all_pass(rs) && cpu < 600.0, buf);
  }

  // 5: action covariance of the commutator for the four generators.
  {
    std::vector<std::uint32_t> gens = {h.index_of({0, 1, 0}), h.index_of({0, 2, 0}),
                                       h.index_of({0, 0, 1}), h.index_of({1, 0, 0})};
    bool ok = check_covariance(bp, gens).pass && check_covariance(be, gens).pass;
    line(5, ok, "commutator covariance for K, K^2, Xp, Xm on both spaces");
  }

  // 6: antisymmetry through the reversed braiding, whose tables are
  // independently confirmed as two-sided inverses.
  {
    bool ok = s.qt->Rbar == tau(s.qt->Rinv) && check_braiding_inverse(bp).pass &&
              check_braiding_inverse(be).pass && check_antisymmetry(bp).pass &&
              check_antisymmetry(be).pass;
    line(6, ok, "antisymmetry via the inverse braiding on both spaces");
  }

  // 7: braid relation of chi on every coordinate triple.
  line(7, check_chi_yang_baxter(bp).pass, "braiding yang-baxter on all 9^3 triples");

  // 8: jacobi obstruction: the (x,x,x) residual, the operator tie-in,
  // and the vanishing dichotomy against the involutive companion.
  {
    Element x = basis1(p, {1, 0});
    Element t3 = tensor(tensor(x, x), x);
    bool fixture = print_element(p, jacobi_residual(bp, x, x, x)) == "-3q^2";
    bool tied = jacobi_residual(bp, x, x, x) ==
                negate(collapse3(p, jacobi_operator_image(bp, t3)));
    Element mixed = tensor(tensor(x, basis1(p, {0, 1})), basis1(p, {1, 1}));
    bool tied2 = jacobi_residual(bp, x, basis1(p, {0, 1}), basis1(p, {1, 1})) ==
                 negate(collapse3(p, jacobi_operator_image(bp, mixed)));
    bool dichotomy = !is_triangular(*s.qt) && check_jacobi_operator(bp).pass &&
                     is_triangular(toy_qt) && check_jacobi_operator(bt).pass &&
                     jacobi_residual(bt, x, basis1(p, {0, 1}), basis1(p, {1, 1})).is_zero();
    line(8, fixture && tied && tied2 && dichotomy,
         "jacobi residual -3q^2 at (x,x,x), operator tie-in, involutive dichotomy");
  }

  // 9: the 3x3 matrix pair q-commutes, its ordinary self-commutator
  // vanishes, and the braided one does not.
  {
    MatrixRep m = matrix_rep();
    bool rel = true, zero = true;
    Matrix3 lhs = m.x * m.y;
    Matrix3 rhs = m.y * m.x;
    Matrix3 comm = m.x * m.x - m.x * m.x;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        rel = rel && lhs(i, j) == q(1) * rhs(i, j);
        zero = zero && comm(i, j) == Scalar(0);
      }
    Element braided = q_commutator(bp, basis1(p, {1, 0}), basis1(p, {1, 0}));
    line(9, rel && zero && !braided.is_zero(),
         "matrix realization: xy = q yx, ordinary [x,x] = 0, braided [x,x] != 0");
  }

  // 10: structure-constant export re-verified entrywise; the coordinate
  // span is flagged as not closed.
  {
    std::vector<std::uint32_t> full(p.dim);
    for (std::uint32_t i = 0; i < p.dim; ++i) full[i] = i;
    QLieData d = export_qlie(bp, full, 3);
    QLieData dxy = export_qlie(bp, {p.index_of({1, 0}), p.index_of({0, 1})}, 3);
    bool ok = d.closed && all_pass(check_qlie_export(bp, d)) && !dxy.closed &&
              all_pass(check_qlie_export(bp, dxy));
    line(10, ok, "structure constants over A0 re-verified; span{x,y} flagged open");
  }

  // 11: every product of the derivative extension agrees with an
  // independent rewriting pass over the exchange relations.
  {
    Rewriter rw(f);
    int disagreements = 0;
    bool budget = true;
    for (std::uint32_t i = 0; i < e.dim && budget; ++i)
      for (std::uint32_t j = 0; j < e.dim && budget; ++j) {
        std::vector<int> ei = e.exponents(i);
        std::vector<int> ej = e.exponents(j);
        Rewriter::Word w;
        for (int g = 0; g < 4; ++g)
          for (int k = 0; k < ei[g]; ++k) w.push_back(g);
        for (int g = 0; g < 4; ++g)
          for (int k = 0; k < ej[g]; ++k) w.push_back(g);
        std::map<std::array<int, 4>, Scalar> acc;
        if (!rw.normalize(std::move(w), Scalar(1), acc)) {
          budget = false;
          break;
        }
        Element want = Element::zero(e.dim, 1);
        for (const auto& [exps, c] : acc)
          want.add_term(e.index_of({exps[0], exps[1], exps[2], exps[3]}), c);
        if (want != e.basis_product(i, j)) ++disagreements;
      }
    std::snprintf(buf, sizeof buf,
                  "rewriting oracle over all 81 x 81 products: %d disagreements%s",
                  disagreements, budget ? "" : " (rewriter budget exhausted)");
    line(11, budget && disagreements == 0, buf);
  }

  // 12: negative controls: one mutation per suite, each caught with a
  // counterexample.
  {
    int caught = 0;
    auto count = [&](bool failed_with_ce) { caught += failed_with_ce ? 1 : 0; };
    auto swept = [](const std::vector<CheckReport>& rs) {
      for (const CheckReport& r : rs)
        if (!r.pass) return r.counterexample.has_value();
      return false;
    };
    auto single = [](const CheckReport& r) {
      return !r.pass && r.counterexample.has_value();
    };

    {
      HopfData bad = s.hopf;
      std::uint32_t xp = h.index_of({0, 0, 1});
      bad.coproduct.table[xp] = scale(bad.coproduct.table[xp], q(1));
      count(swept(check_hopf_axioms(bad)));
    }
    {
      QTStructure bad = *s.qt;
      bad.R.terms[1].second *= q(1);
      count(swept(check_qt_axioms(s.hopf, bad)));
      count(single(check_yang_baxter(h, bad)));
    }
    {
      ModuleAlgebra bad = *s.plane;
      std::uint64_t slot =
          (std::uint64_t)h.index_of({0, 1, 0}) * p.dim + p.index_of({1, 0});
      bad.action[slot] = scale(bad.action[slot], q(1));
      count(swept(check_module_algebra(bad)));
    }
    {
      Braiding bad = bp;
      std::uint64_t k = pack2(p.dim, p.index_of({1, 0}), p.index_of({0, 1}));
      bad.chi.table[k] = scale(bad.chi.table[k], q(1));
      count(single(check_leibniz_second(bad)));
      count(single(check_covariance(bad)));
      count(single(check_antisymmetry(bad)));
      count(single(check_chi_yang_baxter(bad)));
      count(single(check_jacobi_operator(bad)));
    }
    std::snprintf(buf, sizeof buf, "negative controls: %d of 9 mutations caught", caught);
    line(12, caught == 9, buf);
  }

  return failures == 0 ? 0 : 1;
}
