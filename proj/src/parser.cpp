#include "qcomm/parser.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace qcomm {
namespace {

struct Token {
  enum class Kind {
    integer,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    end,
  };
  Kind kind;
  std::int64_t value = 0;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace((unsigned char)c)) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (std::isdigit((unsigned char)c)) {
      std::int64_t v = 0;
      while (i < src.size() && std::isdigit((unsigned char)src[i])) {
        int d = src[i] - '0';
        if (v > (INT64_MAX - d) / 10) throw ParseError(pos, "integer literal out of range");
        v = v * 10 + d;
        ++i;
      }
      out.push_back({Token::Kind::integer, v, "", pos});
      continue;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum((unsigned char)src[j]) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::ident, 0, src.substr(i, j - i), pos});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '^': k = Token::Kind::caret; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      case '[': k = Token::Kind::lbracket; break;
      case ']': k = Token::Kind::rbracket; break;
      case ',': k = Token::Kind::comma; break;
      default: throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, 0, "", pos});
    ++i;
  }
  out.push_back({Token::Kind::end, 0, "", src.size()});
  return out;
}

bool is_space_atom(const std::string& n) {
  return n == "x" || n == "y" || n == "dx" || n == "dy";
}
bool is_hopf_atom(const std::string& n) {
  return n == "K" || n == "Ki" || n == "Xp" || n == "Xm";
}

Sort join_sorts(Sort a, Sort b, std::size_t pos) {
  if (a == b || b == Sort::scalar) return a;
  if (a == Sort::scalar) return b;
  throw ParseError(pos, "space and hopf operands only meet through act");
}

void require_side(const Expr& e, Sort side, const char* what) {
  if (e.sort != Sort::scalar && e.sort != side)
    throw ParseError(e.pos, std::string(what) + (side == Sort::space
                                                     ? " must be space-valued"
                                                     : " must be hopf-valued"));
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  Expr run() {
    Expr e = sum();
    if (peek().kind != Token::Kind::end)
      throw ParseError(peek().pos, "unexpected trailing input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(i_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(i_++, toks_.size() - 1)]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }
  void expect(Token::Kind k, const char* what) {
    if (!accept(k)) throw ParseError(peek().pos, std::string("expected ") + what);
  }

  /// "(x)" acts as the tensor operator only where a binary operator
  /// could stand.
  bool at_tensor() const {
    return peek().kind == Token::Kind::lparen && peek(1).kind == Token::Kind::ident &&
           peek(1).text == "x" && peek(2).kind == Token::Kind::rparen;
  }
  bool starts_factor() const {
    switch (peek().kind) {
      case Token::Kind::integer:
      case Token::Kind::ident:
      case Token::Kind::lparen:
      case Token::Kind::lbracket: return true;
      default: return false;
    }
  }

  Expr node(Expr::Op op, Sort sort, std::size_t pos, std::vector<Expr> args) {
    Expr e;
    e.op = op;
    e.sort = sort;
    e.pos = pos;
    e.args = std::move(args);
    return e;
  }

  Expr sum() {
    std::size_t pos = peek().pos;
    Expr e;
    if (accept(Token::Kind::minus)) {
      Expr inner = tensor_term();
      e = node(Expr::Op::neg, inner.sort, pos, {std::move(inner)});
    } else {
      e = tensor_term();
    }
    for (;;) {
      std::size_t opos = peek().pos;
      if (accept(Token::Kind::plus)) {
        Expr rhs = tensor_term();
        Sort s = join_sorts(e.sort, rhs.sort, opos);
        e = node(Expr::Op::add, s, opos, {std::move(e), std::move(rhs)});
      } else if (accept(Token::Kind::minus)) {
        Expr rhs = tensor_term();
        Sort s = join_sorts(e.sort, rhs.sort, opos);
        e = node(Expr::Op::sub, s, opos, {std::move(e), std::move(rhs)});
      } else {
        return e;
      }
    }
  }

  Expr tensor_term() {
    Expr e = product();
    while (at_tensor()) {
      std::size_t opos = peek().pos;
      i_ += 3;
      Expr rhs = product();
      Sort s = join_sorts(e.sort, rhs.sort, opos);
      e = node(Expr::Op::tensor, s, opos, {std::move(e), std::move(rhs)});
    }
    return e;
  }

  Expr product() {
    Expr e = power();
    for (;;) {
      std::size_t opos = peek().pos;
      if (accept(Token::Kind::star)) {
        Expr rhs = power();
        Sort s = join_sorts(e.sort, rhs.sort, opos);
        e = node(Expr::Op::mul, s, opos, {std::move(e), std::move(rhs)});
      } else if (accept(Token::Kind::slash)) {
        Expr rhs = power();
        if (rhs.sort != Sort::scalar) throw ParseError(rhs.pos, "divisor must be a scalar");
        e = node(Expr::Op::div, e.sort, opos, {std::move(e), std::move(rhs)});
      } else if (starts_factor() && !at_tensor()) {
        Expr rhs = power();
        Sort s = join_sorts(e.sort, rhs.sort, opos);
        e = node(Expr::Op::mul, s, opos, {std::move(e), std::move(rhs)});
      } else {
        return e;
      }
    }
  }

  Expr power() {
    Expr e = factor();
    if (accept(Token::Kind::caret)) {
      if (peek().kind != Token::Kind::integer)
        throw ParseError(peek().pos, "expected a nonnegative integer exponent");
      const Token& t = take();
      Expr p = node(Expr::Op::pow, e.sort, t.pos, {std::move(e)});
      p.value = t.value;
      return p;
    }
    return e;
  }

  Expr pair_form(Expr::Op op, std::size_t pos, const char* close_what, Token::Kind close) {
    Expr a = sum();
    expect(Token::Kind::comma, "','");
    Expr b = sum();
    expect(close, close_what);
    if (op == Expr::Op::act) {
      require_side(a, Sort::hopf, "the first operand of act");
      require_side(b, Sort::space, "the second operand of act");
    } else {
      const char* what = op == Expr::Op::bracket ? "a commutator operand" : "a chi operand";
      require_side(a, Sort::space, what);
      require_side(b, Sort::space, what);
    }
    return node(op, Sort::space, pos, {std::move(a), std::move(b)});
  }

  Expr factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::integer) {
      take();
      Expr e = node(Expr::Op::integer, Sort::scalar, t.pos, {});
      e.value = t.value;
      return e;
    }
    if (t.kind == Token::Kind::ident) {
      take();
      if (t.text == "q") return node(Expr::Op::q_atom, Sort::scalar, t.pos, {});
      if (t.text == "one") return node(Expr::Op::one_atom, Sort::scalar, t.pos, {});
      if (t.text == "chi" || t.text == "act") {
        expect(Token::Kind::lparen, "'('");
        return pair_form(t.text == "chi" ? Expr::Op::chi : Expr::Op::act, t.pos, "')'",
                         Token::Kind::rparen);
      }
      if (is_space_atom(t.text) || is_hopf_atom(t.text)) {
        Expr e = node(Expr::Op::gen, is_space_atom(t.text) ? Sort::space : Sort::hopf,
                      t.pos, {});
        e.name = t.text;
        return e;
      }
      throw ParseError(t.pos, "unknown atom '" + t.text + "'");
    }
    if (accept(Token::Kind::lparen)) {
      Expr e = sum();
      expect(Token::Kind::rparen, "')'");
      return e;
    }
    if (accept(Token::Kind::lbracket))
      return pair_form(Expr::Op::bracket, t.pos, "']'", Token::Kind::rbracket);
    throw ParseError(t.pos, "expected an expression");
  }
};

const Algebra& algebra_of(Sort s, const EvalContext& ctx) {
  return s == Sort::hopf ? ctx.hopf->alg : ctx.space->alg;
}

Element to_element(const Value& v, Sort side, std::uint8_t arity, const EvalContext& ctx) {
  if (v.sort == Sort::scalar)
    return scale(unit_element(algebra_of(side, ctx), arity), v.scalar);
  if (v.element.arity != arity)
    throw EvalError("expected a tensor of arity " + std::to_string((int)arity) + ", got " +
                    std::to_string((int)v.element.arity));
  return v.element;
}

Value scalar_value(Scalar s) {
  Value v;
  v.scalar = std::move(s);
  return v;
}

Value element_value(Sort sort, Element e) {
  Value v;
  v.sort = sort;
  v.element = std::move(e);
  return v;
}

Element generator_element(const Expr& e, const EvalContext& ctx) {
  const Algebra& a = algebra_of(e.sort, ctx);
  std::string want = e.name == "Ki" ? "K" : e.name;
  for (std::size_t f = 0; f < a.factor_names.size(); ++f) {
    if (a.factor_names[f] != want) continue;
    if (e.name == "Ki") {
      std::vector<int> exps(a.factor_names.size(), 0);
      exps[f] = a.factor_orders[f] - 1;
      return Element::basis(a.dim, 1, a.index_of(exps));
    }
    return Element::basis(a.dim, 1, a.generator((int)f));
  }
  throw EvalError("no generator '" + e.name + "' in the active " +
                  (e.sort == Sort::hopf ? "hopf algebra" : "space"));
}

Value combine_sum(const Value& a, const Value& b, bool subtract, const EvalContext& ctx) {
  if (a.sort == Sort::scalar && b.sort == Sort::scalar)
    return scalar_value(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
  Sort side = a.sort == Sort::scalar ? b.sort : a.sort;
  std::uint8_t arity = a.sort == Sort::scalar ? b.element.arity : a.element.arity;
  Element lhs = to_element(a, side, arity, ctx);
  Element rhs = to_element(b, side, arity, ctx);
  return element_value(side, subtract ? sub(lhs, rhs) : add(lhs, rhs));
}

Value combine_mul(const Value& a, const Value& b, const EvalContext& ctx) {
  if (a.sort == Sort::scalar && b.sort == Sort::scalar)
    return scalar_value(a.scalar * b.scalar);
  if (a.sort == Sort::scalar) return element_value(b.sort, scale(b.element, a.scalar));
  if (b.sort == Sort::scalar) return element_value(a.sort, scale(a.element, b.scalar));
  if (a.element.arity != b.element.arity)
    throw EvalError("cannot multiply tensors of different arity");
  const Algebra& alg = algebra_of(a.sort, ctx);
  Element prod = a.element.arity == 1 ? mul(alg, a.element, b.element)
                                      : mul_tensor(alg, a.element, b.element);
  return element_value(a.sort, prod);
}

Value combine_pow(const Value& base, std::int64_t k, const EvalContext& ctx) {
  if (base.sort == Sort::scalar) {
    Scalar acc(1);
    Scalar sq = base.scalar;
    for (std::int64_t e = k; e > 0; e >>= 1) {
      if (e & 1) acc *= sq;
      sq *= sq;
    }
    return scalar_value(acc);
  }
  if (base.element.arity != 1) throw EvalError("cannot raise a tensor to a power");
  const Algebra& alg = algebra_of(base.sort, ctx);
  Element acc = unit_element(alg);
  Element sq = base.element;
  for (std::int64_t e = k; e > 0; e >>= 1) {
    if (e & 1) acc = mul(alg, acc, sq);
    sq = mul(alg, sq, sq);
  }
  return element_value(base.sort, acc);
}

Value combine_tensor(const Value& a, const Value& b, const EvalContext& ctx) {
  if (a.sort != Sort::scalar && b.sort != Sort::scalar && a.sort != b.sort)
    throw EvalError("tensor operands live in different algebras");
  Sort side = a.sort != Sort::scalar ? a.sort
              : b.sort != Sort::scalar ? b.sort
              : ctx.space != nullptr   ? Sort::space
              : ctx.hopf != nullptr    ? Sort::hopf
                                       : Sort::scalar;
  if (side == Sort::scalar)
    throw EvalError("tensor needs an algebra to live in");
  const Algebra& alg = side == Sort::space ? ctx.space->alg : ctx.hopf->alg;
  auto lift = [&](const Value& v) {
    return v.sort == Sort::scalar ? scale(unit_element(alg, 1), v.scalar) : v.element;
  };
  return element_value(side, tensor(lift(a), lift(b)));
}

}  // namespace

Expr parse_expression(const std::string& src) { return Parser(src).run(); }

Value evaluate(const Expr& e, const EvalContext& ctx) {
  switch (e.op) {
    case Expr::Op::integer: return scalar_value(Scalar(e.value));
    case Expr::Op::q_atom: return scalar_value(Scalar::q(*ctx.field));
    case Expr::Op::one_atom: return scalar_value(Scalar(1));
    case Expr::Op::gen: return element_value(e.sort, generator_element(e, ctx));
    case Expr::Op::neg: {
      Value v = evaluate(e.args[0], ctx);
      if (v.sort == Sort::scalar) return scalar_value(-v.scalar);
      return element_value(v.sort, negate(v.element));
    }
    case Expr::Op::add:
    case Expr::Op::sub:
      return combine_sum(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx),
                         e.op == Expr::Op::sub, ctx);
    case Expr::Op::mul:
      return combine_mul(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx), ctx);
    case Expr::Op::div: {
      Value a = evaluate(e.args[0], ctx);
      Value b = evaluate(e.args[1], ctx);
      Scalar inv = b.scalar.inv();
      if (a.sort == Sort::scalar) return scalar_value(a.scalar * inv);
      return element_value(a.sort, scale(a.element, inv));
    }
    case Expr::Op::pow: return combine_pow(evaluate(e.args[0], ctx), e.value, ctx);
    case Expr::Op::tensor:
      return combine_tensor(evaluate(e.args[0], ctx), evaluate(e.args[1], ctx), ctx);
    case Expr::Op::bracket: {
      Element a = evaluate_in_space(e.args[0], ctx);
      Element b = evaluate_in_space(e.args[1], ctx);
      return element_value(Sort::space, q_commutator(*ctx.braiding, a, b));
    }
    case Expr::Op::chi: {
      Element a = evaluate_in_space(e.args[0], ctx);
      Element b = evaluate_in_space(e.args[1], ctx);
      return element_value(Sort::space, braid(*ctx.braiding, tensor(a, b)));
    }
    case Expr::Op::act: {
      Element h = evaluate_in_hopf(e.args[0], ctx);
      Element a = evaluate_in_space(e.args[1], ctx);
      return element_value(Sort::space, act(*ctx.space, h, a));
    }
  }
  throw EvalError("malformed expression tree");
}

Element evaluate_in_space(const Expr& e, const EvalContext& ctx) {
  Value v = evaluate(e, ctx);
  if (v.sort == Sort::hopf) throw EvalError("expected a space-valued expression");
  return to_element(v, Sort::space, 1, ctx);
}

Element evaluate_in_hopf(const Expr& e, const EvalContext& ctx) {
  Value v = evaluate(e, ctx);
  if (v.sort == Sort::space) throw EvalError("expected a hopf-valued expression");
  return to_element(v, Sort::hopf, 1, ctx);
}

}  // namespace qcomm
