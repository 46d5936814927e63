#include "qcomm/qplane.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "qcomm/printing.hpp"

namespace qcomm {

namespace {

// ---------- exact 2x2 matrices over a two-generator span ----------

using Vec2 = std::array<Scalar, 2>;

struct Mat2 {
  std::array<std::array<Scalar, 2>, 2> m{
      {{Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)}}};

  static Mat2 identity() {
    Mat2 r;
    r.m[0][0] = Scalar(1);
    r.m[1][1] = Scalar(1);
    return r;
  }
};

Vec2 mat_vec(const Mat2& a, const Vec2& v) {
  return {a.m[0][0] * v[0] + a.m[0][1] * v[1], a.m[1][0] * v[0] + a.m[1][1] * v[1]};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
  return r;
}

bool mat_is_identity(const Mat2& a) {
  return a.m[0][0].is_one() && a.m[1][1].is_one() && a.m[0][1].is_zero() && a.m[1][0].is_zero();
}

Mat2 mat_pow(const Mat2& a, int e) {
  Mat2 r = Mat2::identity();
  for (int i = 0; i < e; ++i) r = mat_mul(r, a);
  return r;
}

// A two-dimensional H-stable span inside A, with the generator action
// given by one matrix per H-generator. A full H basis monomial
// Xm^al K^be Xp^ga acts as Xm^al (K^be (Xp^ga v)).
struct SpanAction {
  std::array<std::uint32_t, 2> gen_idx{};
  Mat2 k, xm, xp;

  Element act(const Algebra& a, const std::vector<int>& h_exps, int member) const {
    Vec2 v{Scalar(member == 0 ? 1 : 0), Scalar(member == 1 ? 1 : 0)};
    for (int i = 0; i < h_exps[2]; ++i) v = mat_vec(xp, v);
    for (int i = 0; i < h_exps[1]; ++i) v = mat_vec(k, v);
    for (int i = 0; i < h_exps[0]; ++i) v = mat_vec(xm, v);
    Element e = Element::zero(a.dim);
    e.add_term(gen_idx[0], v[0]);
    e.add_term(gen_idx[1], v[1]);
    return e;
  }
};

void gate(const std::vector<CheckReport>& reports, const char* what) {
  for (const CheckReport& r : reports)
    if (!r.pass) {
      std::string msg = std::string(what) + ": " + r.check + " failed";
      if (r.counterexample) {
        msg += " at";
        for (const std::string& in : r.counterexample->inputs) msg += " " + in;
        msg += "; " + r.counterexample->lhs + " != " + r.counterexample->rhs;
      }
      throw ConstructionError(msg);
    }
}

// Extends the generator-span action of every H basis monomial to the
// whole monomial basis of A by peeling one generator factor at a time
// through the coproduct. span_action(h_idx, factor) must give the
// action on the bare generator of that factor.
std::vector<Element> extend_action(
    const HopfData& hopf, const Algebra& a,
    const std::function<Element(std::uint32_t, int)>& span_action) {
  const Algebra& h = hopf.alg;
  std::vector<Element> table((std::uint64_t)h.dim * a.dim, Element::zero(a.dim));
  auto at = [&](std::uint32_t hi, std::uint32_t ai) -> Element& {
    return table[(std::uint64_t)hi * a.dim + ai];
  };
  for (std::uint32_t hi = 0; hi < h.dim; ++hi)
    at(hi, a.unit).add_term(a.unit, hopf.counit[hi]);
  for (std::uint32_t ai = 1; ai < a.dim; ++ai) {
    std::vector<int> exps = a.exponents(ai);
    int factor = 0;
    while (exps[factor] == 0) ++factor;
    --exps[factor];
    std::uint32_t rest = a.index_of(exps);
    for (std::uint32_t hi = 0; hi < h.dim; ++hi) {
      Element r = Element::zero(a.dim);
      for (const auto& [dkey, dc] : hopf.coproduct.table[hi].terms) {
        auto legs = unpack_key(dkey, h.dim, 2);
        Element left = span_action(legs[0], factor);
        if (left.is_zero()) continue;
        r = add(r, scale(mul(a, left, at(legs[1], rest)), dc));
      }
      at(hi, ai) = std::move(r);
    }
  }
  return table;
}

// chi on a pair of basis monomials, straight from the R decomposition.
Element chi_basis(const ModuleAlgebra& m, const QTStructure& qt, std::uint32_t a_idx,
                  std::uint32_t b_idx) {
  Element out = Element::zero(m.alg.dim, 2);
  for (const auto& [key, c] : qt.R.terms) {
    auto legs = unpack_key(key, m.hopf->alg.dim, 2);
    out = add(out, scale(tensor(m.act_basis(legs[1], b_idx), m.act_basis(legs[0], a_idx)), c));
  }
  return out;
}

struct FixtureTerm {
  Scalar coeff;
  std::vector<int> first;
  std::vector<int> second;
};

void gate_chi_fixtures(const ModuleAlgebra& m, const QTStructure& qt,
                       const std::vector<std::pair<std::array<std::vector<int>, 2>,
                                                   std::vector<FixtureTerm>>>& fixtures,
                       const char* what) {
  const Algebra& a = m.alg;
  for (const auto& [pair, terms] : fixtures) {
    std::uint32_t ai = a.index_of(pair[0]), bi = a.index_of(pair[1]);
    Element got = chi_basis(m, qt, ai, bi);
    Element want = Element::zero(a.dim, 2);
    for (const FixtureTerm& t : terms)
      want.add_term(pack2(a.dim, a.index_of(t.first), a.index_of(t.second)), t.coeff);
    if (got != want)
      throw ConstructionError(std::string(what) + ": braiding fixture mismatch at (" +
                              a.label(ai) + ", " + a.label(bi) + "); " + print_element(a, got) +
                              " != " + print_element(a, want));
  }
}

// ---------- the exact linear solves for the derivative action ----------

// Unknown-side slices of a tensor fixture: basis monomial of the known
// slot -> the two span components of the unknown slot.
using Slices = std::map<std::uint32_t, Vec2>;

void add_slice(Slices& s, std::uint32_t m, int comp, const Scalar& c) {
  auto& v = s.try_emplace(m, Vec2{Scalar(0), Scalar(0)}).first->second;
  v[comp] += c;
}

// Solves known (x) w == target for the 2-vector w, requiring exact
// consistency across the whole support.
Vec2 solve_tensor_column(const Element& known, const Slices& target, const char* what) {
  if (known.is_zero()) throw ConstructionError(std::string(what) + ": empty pivot element");
  const auto& [pkey, pc] = known.terms.front();
  Slices::const_iterator hit = target.find((std::uint32_t)pkey);
  Vec2 w{Scalar(0), Scalar(0)};
  if (hit != target.end()) w = {hit->second[0] / pc, hit->second[1] / pc};
  // exhaustive consistency: every slice must match known's coefficient times w
  std::map<std::uint32_t, Scalar> support;
  for (const auto& [k, c] : known.terms) support[(std::uint32_t)k] = c;
  std::vector<std::uint32_t> keys;
  for (const auto& [k, c] : support) keys.push_back(k);
  for (const auto& [k, v] : target) keys.push_back(k);
  for (std::uint32_t k : keys) {
    Scalar kc = support.count(k) ? support[k] : Scalar(0);
    Vec2 tv = target.count(k) ? target.at(k) : Vec2{Scalar(0), Scalar(0)};
    if (!(kc * w[0] == tv[0]) || !(kc * w[1] == tv[1]))
      throw ConstructionError(std::string(what) + ": inconsistent tensor column");
  }
  return w;
}

// Row-reduces [A | b] and returns the unique exact solution; throws when
// the system is underdetermined or inconsistent.
std::vector<Scalar> solve_linear_exact(DenseMatrix a, DenseVector b, const char* what) {
  int rows = (int)a.rows(), cols = (int)a.cols();
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = -1;
    for (int r = rank; r < rows; ++r)
      if (!a(r, c).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    a.row(p).swap(a.row(rank));
    std::swap(b(p), b(rank));
    Scalar inv = a(rank, c).inv();
    for (int k = c; k < cols; ++k) a(rank, k) *= inv;
    b(rank) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a(r, c).is_zero()) continue;
      Scalar f = a(r, c);
      for (int k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
      b(r) -= f * b(rank);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < cols) throw ConstructionError(std::string(what) + ": underdetermined solve");
  for (int r = rank; r < rows; ++r)
    if (!b(r).is_zero()) throw ConstructionError(std::string(what) + ": inconsistent solve");
  std::vector<Scalar> x(cols, Scalar(0));
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = b(i);
  return x;
}

struct DerivAction {
  Mat2 k, xm, xp;
};

// Solves the action of the generators on span{dx, dy} from the
// derivative braiding fixtures, in three stages: the x-column fixtures
// pin a power of the K matrix, the y-column fixtures then pin the
// lowering matrix linearly, and the reversed-slot x-column fixtures pin
// the raising matrix linearly. Each stage verifies the structural
// assumptions it relies on and the construction re-verifies all sixteen
// fixtures afterwards, so nothing rests on the staging itself.
DerivAction solve_derivative_action(const ModuleAlgebra& plane, const QTStructure& qt) {
  const Algebra& p = plane.alg;
  const Algebra& h = plane.hopf->alg;
  int order = p.factor_orders[0];
  const CycloField& f = CycloField::of_order(order);
  auto q = [&](long e) { return q_pow(f, e); };
  std::uint32_t xi = p.index_of({1, 0}), yi = p.index_of({0, 1});

  // stage one: second slot x; survivors must be pure K powers
  std::vector<Element> ex(order, Element::zero(p.dim));
  for (const auto& [key, c] : qt.R.terms) {
    auto legs = unpack_key(key, h.dim, 2);
    Element w2 = scale(plane.act_basis(legs[1], xi), c);
    if (w2.is_zero()) continue;
    std::vector<int> e1 = h.exponents(legs[0]);
    if (e1[0] != 0 || e1[2] != 0)
      throw ConstructionError("derivative action: stage one leg is not a K power");
    ex[e1[1]] = add(ex[e1[1]], w2);
  }
  int live = -1;
  for (int b = 0; b < order; ++b) {
    if (ex[b].is_zero()) continue;
    if (b == 0 || live >= 0)
      throw ConstructionError("derivative action: stage one is not a single-power system");
    live = b;
  }
  if (live < 0 || std::gcd(live, order) != 1)
    throw ConstructionError("derivative action: stage one power is not invertible");

  Slices t1x{{xi, {q(1), Scalar(0)}}};   // chi(dx (x) x) = q x (x) dx
  Slices t1y{{xi, {Scalar(0), q(2)}}};   // chi(dy (x) x) = q^2 x (x) dy
  Vec2 wx = solve_tensor_column(ex[live], t1x, "derivative action stage one");
  Vec2 wy = solve_tensor_column(ex[live], t1y, "derivative action stage one");
  Mat2 w;
  w.m[0][0] = wx[0];
  w.m[1][0] = wx[1];
  w.m[0][1] = wy[0];
  w.m[1][1] = wy[1];
  int einv = 1;
  while (einv * live % order != 1) ++einv;
  Mat2 mk = mat_pow(w, einv);
  if (!mat_is_identity(mat_pow(mk, order)))
    throw ConstructionError("derivative action: K matrix does not close the group relation");
  if (!mat_is_identity(mat_mul(mat_pow(mk, order - live), w)))
    throw ConstructionError("derivative action: K power recovery failed");

  std::array<Mat2, 3> mkp{Mat2::identity(), mk, mat_mul(mk, mk)};

  // stage two: second slot y; K legs are known, single lowering legs are
  // linear in the unknown matrix
  std::vector<Element> f0(order, Element::zero(p.dim)), f1(order, Element::zero(p.dim));
  for (const auto& [key, c] : qt.R.terms) {
    auto legs = unpack_key(key, h.dim, 2);
    Element w2 = scale(plane.act_basis(legs[1], yi), c);
    if (w2.is_zero()) continue;
    std::vector<int> e1 = h.exponents(legs[0]);
    if (e1[2] != 0 || e1[0] > 1)
      throw ConstructionError("derivative action: stage two leg shape unsupported");
    (e1[0] == 0 ? f0 : f1)[e1[1]] = add((e1[0] == 0 ? f0 : f1)[e1[1]], w2);
  }
  Slices t2x{{yi, {q(2), Scalar(0)}}};  // chi(dx (x) y) = q^2 y (x) dx
  Slices t2y{{xi, {q(1) - Scalar(1), Scalar(0)}},
             {yi, {Scalar(0), q(1)}}};  // chi(dy (x) y) = (q-1) x (x) dx + q y (x) dy

  std::vector<std::array<Scalar, 4>> rows;
  std::vector<Scalar> rhs;
  for (int dcol = 0; dcol < 2; ++dcol) {
    const Slices& target = dcol == 0 ? t2x : t2y;
    Vec2 base{Scalar(dcol == 0 ? 1 : 0), Scalar(dcol == 1 ? 1 : 0)};
    Slices known;
    std::vector<std::uint32_t> monos;
    for (int b = 0; b < order; ++b) {
      Vec2 v = mat_vec(mkp[b], base);
      for (const auto& [mkey, mc] : f0[b].terms) {
        add_slice(known, (std::uint32_t)mkey, 0, mc * v[0]);
        add_slice(known, (std::uint32_t)mkey, 1, mc * v[1]);
      }
      for (const auto& [mkey, mc] : f1[b].terms) monos.push_back((std::uint32_t)mkey);
    }
    for (const auto& [mkey, v] : known) monos.push_back(mkey);
    for (const auto& [mkey, v] : target) monos.push_back(mkey);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    for (std::uint32_t mono : monos)
      for (int r = 0; r < 2; ++r) {
        std::array<Scalar, 4> row{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
        for (int b = 0; b < order; ++b) {
          Scalar fc = f1[b].coeff(mono);
          if (fc.is_zero()) continue;
          Vec2 v = mat_vec(mkp[b], base);
          row[r * 2 + 0] += fc * v[0];
          row[r * 2 + 1] += fc * v[1];
        }
        Scalar t = target.count(mono) ? target.at(mono)[r] : Scalar(0);
        Scalar kn = known.count(mono) ? known.at(mono)[r] : Scalar(0);
        rows.push_back(row);
        rhs.push_back(t - kn);
      }
  }
  DenseMatrix a2((int)rows.size(), 4);
  DenseVector b2((int)rows.size());
  for (int r = 0; r < (int)rows.size(); ++r) {
    for (int c = 0; c < 4; ++c) a2(r, c) = rows[r][c];
    b2(r) = rhs[r];
  }
  std::vector<Scalar> lsol = solve_linear_exact(a2, b2, "derivative action stage two");
  Mat2 ml;
  ml.m[0][0] = lsol[0];
  ml.m[0][1] = lsol[1];
  ml.m[1][0] = lsol[2];
  ml.m[1][1] = lsol[3];

  // stage three: derivative in the second tensor slot against x; raising
  // legs of order one are linear in the unknown matrix
  std::vector<Element> g0(order, Element::zero(p.dim)), g1(order, Element::zero(p.dim));
  for (const auto& [key, c] : qt.R.terms) {
    auto legs = unpack_key(key, h.dim, 2);
    Element w1 = scale(plane.act_basis(legs[0], xi), c);
    if (w1.is_zero()) continue;
    std::vector<int> e2 = h.exponents(legs[1]);
    if (e2[0] != 0 || e2[2] > 1)
      throw ConstructionError("derivative action: stage three leg shape unsupported");
    (e2[2] == 0 ? g0 : g1)[e2[1]] = add((e2[2] == 0 ? g0 : g1)[e2[1]], w1);
  }
  // chi(x (x) dx) = q dx (x) x + (q^2-q) dy (x) y
  Slices t3x{{xi, {q(1), Scalar(0)}}, {yi, {Scalar(0), q(2) - q(1)}}};
  // chi(x (x) dy) = q^2 dy (x) x
  Slices t3y{{xi, {Scalar(0), q(2)}}};

  Mat2 mu;
  for (int dcol = 0; dcol < 2; ++dcol) {
    const Slices& target = dcol == 0 ? t3x : t3y;
    Vec2 base{Scalar(dcol == 0 ? 1 : 0), Scalar(dcol == 1 ? 1 : 0)};
    Slices known;
    std::vector<std::uint32_t> monos;
    for (int b = 0; b < order; ++b) {
      Vec2 v = mat_vec(mkp[b], base);
      for (const auto& [mkey, mc] : g0[b].terms) {
        add_slice(known, (std::uint32_t)mkey, 0, mc * v[0]);
        add_slice(known, (std::uint32_t)mkey, 1, mc * v[1]);
      }
      for (const auto& [mkey, mc] : g1[b].terms) monos.push_back((std::uint32_t)mkey);
    }
    for (const auto& [mkey, v] : known) monos.push_back(mkey);
    for (const auto& [mkey, v] : target) monos.push_back(mkey);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::vector<std::array<Scalar, 2>> rows3;
    std::vector<Scalar> rhs3;
    for (std::uint32_t mono : monos)
      for (int r = 0; r < 2; ++r) {
        std::array<Scalar, 2> row{Scalar(0), Scalar(0)};
        for (int b = 0; b < order; ++b) {
          Scalar gc = g1[b].coeff(mono);
          if (gc.is_zero()) continue;
          row[0] += gc * mkp[b].m[r][0];
          row[1] += gc * mkp[b].m[r][1];
        }
        Scalar t = target.count(mono) ? target.at(mono)[r] : Scalar(0);
        Scalar kn = known.count(mono) ? known.at(mono)[r] : Scalar(0);
        rows3.push_back(row);
        rhs3.push_back(t - kn);
      }
    DenseMatrix a3((int)rows3.size(), 2);
    DenseVector b3((int)rows3.size());
    for (int r = 0; r < (int)rows3.size(); ++r) {
      a3(r, 0) = rows3[r][0];
      a3(r, 1) = rows3[r][1];
      b3(r) = rhs3[r];
    }
    std::vector<Scalar> usol = solve_linear_exact(a3, b3, "derivative action stage three");
    mu.m[0][dcol] = usol[0];
    mu.m[1][dcol] = usol[1];
  }

  return DerivAction{mk, ml, mu};
}

// ---------- the operator model of the extension ----------

struct OperatorModel {
  long base = 0;
  int s = 0, t = 0;
  std::vector<DenseMatrix> ops;                   // one 9x9 operator per basis monomial
  std::array<std::array<DenseMatrix, 3>, 3> inv;  // extraction solves per offset block
};

std::uint32_t ext_index(int a, int b, int c, int d) {
  return (std::uint32_t)(((a * 3 + b) * 3 + c) * 3 + d);
}

Element extract_operator(const OperatorModel& model, const DenseMatrix& p) {
  Element out = Element::zero(81);
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      DenseVector pvec(9);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          pvec(i * 3 + j) = p(((i + u) % 3) * 3 + (j + v) % 3, i * 3 + j);
      DenseVector coeffs = model.inv[u][v] * pvec;
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Scalar& cc = coeffs(c * 3 + d);
          if (!cc.is_zero()) out.add_term(ext_index((u + c) % 3, (v + d) % 3, c, d), cc);
        }
    }
  return out;
}

// Builds the 81 operator matrices for one candidate q-difference model
// and the extraction inverses; empty result when an offset block is
// singular, which already disqualifies the candidate.
std::optional<OperatorModel> try_model(const Algebra& plane, const CycloField& f, long base,
                                       int s, int t) {
  OperatorModel model;
  model.base = base;
  model.s = s;
  model.t = t;

  auto lm = [&](std::uint32_t g) {
    DenseMatrix m = DenseMatrix::Constant(9, 9, Scalar(0));
    for (std::uint32_t j = 0; j < 9; ++j)
      for (const auto& [key, c] : plane.basis_product(g, j).terms) m((int)key, (int)j) = c;
    return m;
  };
  auto qint = [&](int a) {
    Scalar r(0);
    for (int k = 0; k < a; ++k) r += q_pow(f, base * k);
    return r;
  };
  DenseMatrix dx = DenseMatrix::Constant(9, 9, Scalar(0));
  DenseMatrix dy = DenseMatrix::Constant(9, 9, Scalar(0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a > 0) dx((a - 1) * 3 + b, a * 3 + b) = qint(a) * q_pow(f, (long)s * b);
      if (b > 0) dy(a * 3 + b - 1, a * 3 + b) = qint(b) * q_pow(f, (long)t * a);
    }

  std::array<std::vector<DenseMatrix>, 4> pow;
  DenseMatrix eye = DenseMatrix::Constant(9, 9, Scalar(0));
  for (int i = 0; i < 9; ++i) eye(i, i) = Scalar(1);
  std::array<DenseMatrix, 4> gens{lm(plane.index_of({1, 0})), lm(plane.index_of({0, 1})), dx, dy};
  for (int g = 0; g < 4; ++g) {
    pow[g].push_back(eye);
    for (int e = 1; e < 3; ++e) pow[g].push_back(pow[g][e - 1] * gens[g]);
  }
  model.ops.reserve(81);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d)
          model.ops.push_back(pow[0][a] * pow[1][b] * pow[2][c] * pow[3][d]);

  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      DenseMatrix block(9, 9);
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const DenseMatrix& op = model.ops[ext_index((u + c) % 3, (v + d) % 3, c, d)];
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              block(i * 3 + j, c * 3 + d) = op(((i + u) % 3) * 3 + (j + v) % 3, i * 3 + j);
        }
      try {
        model.inv[u][v] = exact_inverse(block);
      } catch (const DivisionByZero&) {
        return std::nullopt;
      }
    }
  return model;
}

bool screen_model(const OperatorModel& model, const CycloField& f) {
  auto q = [&](long e) { return q_pow(f, e); };
  std::uint32_t mx = ext_index(1, 0, 0, 0), mdx = ext_index(0, 0, 1, 0);
  std::uint32_t mdy = ext_index(0, 0, 0, 1), my = ext_index(0, 1, 0, 0);

  Element dx_x = extract_operator(model, model.ops[mdx] * model.ops[mx]);
  Element dy_y = extract_operator(model, model.ops[mdy] * model.ops[my]);

  // [dx, x] = dx x - q x dx must give 1 + (q^2-q) x dx + (q^2-1) y dy
  Element comm1 = dx_x;
  comm1.add_term(ext_index(1, 0, 1, 0), -q(1));
  Element want1 = Element::zero(81);
  want1.add_term(0, Scalar(1));
  want1.add_term(ext_index(1, 0, 1, 0), q(2) - q(1));
  want1.add_term(ext_index(0, 1, 0, 1), q(2) - Scalar(1));
  if (comm1 != want1) return false;

  // [x, dx] = x dx - q dx x - (q^2-q) dy y must give -q^2 1
  Element comm2 = Element::zero(81);
  comm2.add_term(ext_index(1, 0, 1, 0), Scalar(1));
  comm2 = sub(comm2, scale(dx_x, q(1)));
  comm2 = sub(comm2, scale(dy_y, q(2) - q(1)));
  Element want2 = Element::zero(81);
  want2.add_term(0, -q(2));
  return comm2 == want2;
}

std::vector<std::pair<std::array<std::vector<int>, 2>, std::vector<FixtureTerm>>>
extension_chi_fixtures(const CycloField& fld) {
  auto q = [&](long e) { return q_pow(fld, e); };
  std::vector<int> x{1, 0, 0, 0}, y{0, 1, 0, 0}, dx{0, 0, 1, 0}, dy{0, 0, 0, 1};
  std::vector<std::pair<std::array<std::vector<int>, 2>, std::vector<FixtureTerm>>> fx;
  auto put = [&](std::vector<int> a, std::vector<int> b, std::vector<FixtureTerm> terms) {
    fx.push_back({{std::move(a), std::move(b)}, std::move(terms)});
  };
  put(x, x, {{q(2), x, x}});
  put(y, x, {{q(1), x, y}});
  put(x, y, {{q(1), y, x}, {q(2) - Scalar(1), x, y}});
  put(y, y, {{q(2), y, y}});
  put(dx, x, {{q(1), x, dx}});
  put(dy, x, {{q(2), x, dy}});
  put(dx, y, {{q(2), y, dx}});
  put(dy, y, {{q(1) - Scalar(1), x, dx}, {q(1), y, dy}});
  put(x, dx, {{q(1), dx, x}, {q(2) - q(1), dy, y}});
  put(y, dx, {{q(2), dx, y}});
  put(dx, dx, {{q(2), dx, dx}});
  put(dy, dx, {{q(2) - Scalar(1), dy, dx}, {q(1), dx, dy}});
  put(x, dy, {{q(2), dy, x}});
  put(y, dy, {{q(1), dy, y}});
  put(dx, dy, {{q(1), dy, dx}});
  put(dy, dy, {{q(2), dy, dy}});
  return fx;
}

}  // namespace

Element act(const ModuleAlgebra& m, const Element& h, const Element& a) {
  if (h.arity != 1 || a.arity != 1) throw std::invalid_argument("action takes arity-1 elements");
  if (h.dim != m.hopf->alg.dim || a.dim != m.alg.dim)
    throw std::invalid_argument("action over mismatched bases");
  Element r = Element::zero(m.alg.dim);
  for (const auto& [hk, hc] : h.terms)
    for (const auto& [ak, ac] : a.terms) r = add(r, scale(m.act_basis((std::uint32_t)hk, (std::uint32_t)ak), hc * ac));
  return r;
}

std::vector<CheckReport> check_module_algebra(const ModuleAlgebra& m) {
  const Algebra& a = m.alg;
  const HopfData& hopf = *m.hopf;
  const Algebra& h = hopf.alg;
  std::vector<CheckReport> out;

  {
    Stopwatch w;
    CheckReport r = CheckReport::ok("action-unit");
    for (std::uint32_t ai = 0; ai < a.dim && r.pass; ++ai) {
      Element got = m.act_basis(h.unit, ai);
      Element want = Element::basis(a.dim, 1, ai);
      if (got != want)
        r = CheckReport::failed("action-unit", {{h.label(h.unit), a.label(ai)},
                                                print_element(a, got), print_element(a, want)});
    }
    for (std::uint32_t hi = 0; hi < h.dim && r.pass; ++hi) {
      Element got = m.act_basis(hi, a.unit);
      Element want = Element::zero(a.dim);
      want.add_term(a.unit, hopf.counit[hi]);
      if (got != want)
        r = CheckReport::failed("action-unit", {{h.label(hi), a.label(a.unit)},
                                                print_element(a, got), print_element(a, want)});
    }
    r.seconds = w.seconds();
    out.push_back(std::move(r));
  }

  {
    Stopwatch w;
    CheckReport r = CheckReport::ok("action-composition");
    for (std::uint32_t gi = 0; gi < h.dim && r.pass; ++gi)
      for (std::uint32_t hi = 0; hi < h.dim && r.pass; ++hi) {
        const Element& prod = h.basis_product(gi, hi);
        for (std::uint32_t ai = 0; ai < a.dim && r.pass; ++ai) {
          Element lhs = Element::zero(a.dim);
          for (const auto& [pk, pc] : prod.terms)
            lhs = add(lhs, scale(m.act_basis((std::uint32_t)pk, ai), pc));
          Element rhs = Element::zero(a.dim);
          for (const auto& [ik, ic] : m.act_basis(hi, ai).terms)
            rhs = add(rhs, scale(m.act_basis(gi, (std::uint32_t)ik), ic));
          if (lhs != rhs)
            r = CheckReport::failed("action-composition",
                                    {{h.label(gi), h.label(hi), a.label(ai)},
                                     print_element(a, lhs), print_element(a, rhs)});
        }
      }
    r.seconds = w.seconds();
    out.push_back(std::move(r));
  }

  {
    Stopwatch w;
    CheckReport r = CheckReport::ok("module-algebra-law");
    std::vector<std::uint32_t> gens;
    for (std::size_t fct = 0; fct < h.factor_names.size(); ++fct) {
      std::vector<int> e(h.factor_names.size(), 0);
      e[fct] = 1;
      gens.push_back(h.index_of(e));
      if (h.factor_orders[fct] > 2) {
        e[fct] = h.factor_orders[fct] - 1;
        gens.push_back(h.index_of(e));
      }
    }
    for (std::uint32_t gi : gens) {
      const Element& cop = hopf.coproduct.table[gi];
      for (std::uint32_t ai = 0; ai < a.dim && r.pass; ++ai)
        for (std::uint32_t bi = 0; bi < a.dim && r.pass; ++bi) {
          Element lhs = Element::zero(a.dim);
          for (const auto& [pk, pc] : a.basis_product(ai, bi).terms)
            lhs = add(lhs, scale(m.act_basis(gi, (std::uint32_t)pk), pc));
          Element rhs = Element::zero(a.dim);
          for (const auto& [dk, dc] : cop.terms) {
            auto legs = unpack_key(dk, h.dim, 2);
            rhs = add(rhs, scale(mul(a, m.act_basis(legs[0], ai), m.act_basis(legs[1], bi)), dc));
          }
          if (lhs != rhs)
            r = CheckReport::failed("module-algebra-law",
                                    {{h.label(gi), a.label(ai), a.label(bi)},
                                     print_element(a, lhs), print_element(a, rhs)});
        }
      if (!r.pass) break;
    }
    r.seconds = w.seconds();
    out.push_back(std::move(r));
  }

  return out;
}

ModuleAlgebra build_quantum_plane(const HopfData& h, const QTStructure& qt) {
  if (h.alg.factor_names != std::vector<std::string>{"Xm", "K", "Xp"})
    throw std::invalid_argument("the plane is acted on by the quantum group");
  int n = h.alg.factor_orders[1];
  const CycloField& f = CycloField::of_order(n);

  ModuleAlgebra m;
  m.hopf = &h;
  m.alg = make_algebra({"x", "y"}, {n, n}, [&](std::uint32_t i, std::uint32_t j) {
    int ax = (int)(i / n), ay = (int)(i % n);
    int bx = (int)(j / n), by = (int)(j % n);
    Element e = Element::zero((std::uint32_t)(n * n));
    e.add_term((std::uint32_t)((ax + bx) % n * n + (ay + by) % n), q_pow(f, -(long)ay * bx));
    return e;
  });

  SpanAction coords;
  coords.gen_idx = {m.alg.index_of({1, 0}), m.alg.index_of({0, 1})};
  coords.k.m[0][0] = q_pow(f, 1);
  coords.k.m[1][1] = q_pow(f, -1);
  coords.xp.m[0][1] = Scalar(1);
  coords.xm.m[1][0] = Scalar(1);

  m.action = extend_action(h, m.alg, [&](std::uint32_t hi, int factor) {
    return coords.act(m.alg, h.alg.exponents(hi), factor);
  });

  gate(check_module_algebra(m), "plane construction");

  auto q = [&](long e) { return q_pow(f, e); };
  std::vector<int> x{1, 0}, y{0, 1};
  std::vector<std::pair<std::array<std::vector<int>, 2>, std::vector<FixtureTerm>>> fx;
  fx.push_back({{x, x}, {{q(2), x, x}}});
  fx.push_back({{y, x}, {{q(1), x, y}}});
  fx.push_back({{x, y}, {{q(1), y, x}, {q(2) - Scalar(1), x, y}}});
  fx.push_back({{y, y}, {{q(2), y, y}}});
  gate_chi_fixtures(m, qt, fx, "plane construction");

  return m;
}

ModuleAlgebra build_extended_plane(const HopfData& h, const QTStructure& qt) {
  ModuleAlgebra plane = build_quantum_plane(h, qt);
  if (plane.alg.dim != 9)
    throw std::invalid_argument("the derivative extension is instantiated at order 3");
  const CycloField& f = CycloField::of_order(3);

  DerivAction deriv = solve_derivative_action(plane, qt);

  auto assemble = [&](const OperatorModel& model) {
    // faithfulness: the 81 operators must span the full operator space
    DenseMatrix span(81, 81);
    for (int op = 0; op < 81; ++op)
      for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c) span(r * 9 + c, op) = model.ops[op](r, c);
    if (exact_rank(span) != 81)
      throw ConstructionError("derivative model: operator realization is not faithful");

    ModuleAlgebra m;
    m.hopf = &h;
    m.alg = make_algebra({"x", "y", "dx", "dy"}, {3, 3, 3, 3},
                         [&](std::uint32_t i, std::uint32_t j) {
                           return extract_operator(model, model.ops[i] * model.ops[j]);
                         },
                         /*verify=*/false);
    // associativity is inherited from the faithful matrix realization;
    // the unit laws are still worth the cheap sweep
    gate({check_unit_laws(m.alg)}, "extension construction");

    SpanAction coords;
    coords.gen_idx = {m.alg.index_of({1, 0, 0, 0}), m.alg.index_of({0, 1, 0, 0})};
    coords.k.m[0][0] = q_pow(f, 1);
    coords.k.m[1][1] = q_pow(f, -1);
    coords.xp.m[0][1] = Scalar(1);
    coords.xm.m[1][0] = Scalar(1);

    SpanAction derivs;
    derivs.gen_idx = {m.alg.index_of({0, 0, 1, 0}), m.alg.index_of({0, 0, 0, 1})};
    derivs.k = deriv.k;
    derivs.xm = deriv.xm;
    derivs.xp = deriv.xp;

    m.action = extend_action(h, m.alg, [&](std::uint32_t hi, int factor) {
      const SpanAction& span_a = factor < 2 ? coords : derivs;
      return span_a.act(m.alg, h.alg.exponents(hi), factor % 2);
    });

    gate(check_module_algebra(m), "extension construction");
    gate_chi_fixtures(m, qt, extension_chi_fixtures(f), "extension construction");
    return m;
  };

  // The commutator fixtures alone leave a handful of twist candidates
  // standing; the action compatibility of the product table is what cuts
  // the set down, so every screened candidate runs the full gates and
  // exactly one may come out alive.
  std::vector<OperatorModel> screened;
  for (long base : {1L, 2L})
    for (int s = 0; s < 3; ++s)
      for (int t = 0; t < 3; ++t) {
        std::optional<OperatorModel> cand = try_model(plane.alg, f, base, s, t);
        if (cand && screen_model(*cand, f)) screened.push_back(std::move(*cand));
      }
  if (screened.empty())
    throw ConstructionError("derivative model: no candidate matches the fixtures");

  std::optional<ModuleAlgebra> built;
  for (const OperatorModel& model : screened) {
    ModuleAlgebra m;
    try {
      m = assemble(model);
    } catch (const ConstructionError&) {
      continue;
    }
    if (built)
      throw ConstructionError("derivative model: fixtures admit more than one model");
    built = std::move(m);
  }
  if (!built)
    throw ConstructionError("derivative model: no screened candidate survives the full gates");
  return *built;
}

ModuleAlgebra build_toy_module(const HopfData& toy, const Algebra& plane) {
  if (toy.alg.factor_names != std::vector<std::string>{"g"})
    throw std::invalid_argument("the toy module is acted on by the cyclic group algebra");
  int n = toy.alg.factor_orders[0];
  if (plane.factor_orders != std::vector<int>{n, n})
    throw std::invalid_argument("group order must match the plane order");
  const CycloField& f = CycloField::of_order(n);

  ModuleAlgebra m;
  m.hopf = &toy;
  m.alg = plane;
  m.action.reserve((std::uint64_t)toy.alg.dim * plane.dim);
  for (std::uint32_t hi = 0; hi < toy.alg.dim; ++hi)
    for (std::uint32_t ai = 0; ai < plane.dim; ++ai) {
      std::vector<int> e = plane.exponents(ai);
      Element el = Element::zero(plane.dim);
      el.add_term(ai, q_pow(f, (long)hi * (e[0] - e[1])));
      m.action.push_back(std::move(el));
    }
  gate(check_module_algebra(m), "toy module construction");
  return m;
}

MatrixRep matrix_rep() {
  const CycloField& f = CycloField::of_order(3);
  MatrixRep r;
  r.x = Matrix3::Constant(Scalar(0));
  r.y = Matrix3::Constant(Scalar(0));
  r.x(0, 0) = Scalar(1);
  r.x(1, 1) = q_pow(f, -1);
  r.x(2, 2) = q_pow(f, -2);
  r.y(0, 1) = Scalar(1);
  r.y(1, 2) = Scalar(1);
  r.y(2, 0) = Scalar(1);
  Matrix3 lhs = r.x * r.y;
  Matrix3 rhs = r.y * r.x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!(lhs(i, j) == q_pow(f, 1) * rhs(i, j)))
        throw ConstructionError("matrix representation does not satisfy x y = q y x");
  return r;
}

}  // namespace qcomm
