#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcomm/braiding.hpp"

namespace qcomm {

/// Syntax or typing failure during parsing; pos is the byte offset into
/// the source the message points at.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t p, const std::string& msg)
      : std::runtime_error("at " + std::to_string(p) + ": " + msg), pos(p) {}
};

/// Failure while evaluating a well-formed expression, e.g. a generator
/// that does not exist in the active space.
struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Which side of the action an expression lives on. Scalars stay
/// polymorphic until they meet an algebra-valued operand; space and hopf
/// values never mix except through the act form.
enum class Sort { scalar, space, hopf };

/// Expression tree. Atoms are the fixed generator names of the two
/// algebras plus q, one and integer literals; the only compound forms
/// beyond arithmetic are the commutator bracket, the braiding and the
/// action.
struct Expr {
  enum class Op {
    integer,   // value
    q_atom,    // the root of unity
    one_atom,  // multiplicative unit, polymorphic like a literal
    gen,       // name: x y dx dy K Ki Xp Xm
    neg,
    add,
    sub,
    mul,
    div,
    pow,     // args[0] ^ value
    tensor,  // infix (x)
    bracket,
    chi,
    act,
  };

  Op op;
  Sort sort = Sort::scalar;
  std::int64_t value = 0;
  std::string name;
  std::vector<Expr> args;
  std::size_t pos = 0;
};

/// Grammar, loosest binding first: sums with unary minus, then the
/// infix tensor "(x)", then products (explicit *, /, and juxtaposition:
/// "2q", "(1-q^2) x^2"), then ^ with a nonnegative integer exponent,
/// then atoms, parentheses, [a, b], chi(a, b) and act(h, a). A
/// parenthesized lone x counts as the tensor operator only in operator
/// position, so "(x) y" is a product while "a (x) y" is a tensor.
/// Canonical element printing parses back to the value it printed.
/// Throws ParseError with the offending position, including when a
/// subexpression mixes space and hopf operands outside act.
Expr parse_expression(const std::string& src);

/// Everything evaluation needs: the scalar field, the acting Hopf
/// algebra, the active space with its braiding.
struct EvalContext {
  const CycloField* field = nullptr;
  const HopfData* hopf = nullptr;
  const ModuleAlgebra* space = nullptr;
  const Braiding* braiding = nullptr;
};

/// Evaluated expression: a bare scalar, or an element of the space or
/// the Hopf algebra, possibly of tensor arity above one.
struct Value {
  Sort sort = Sort::scalar;
  Scalar scalar;
  Element element;
};

/// Exact evaluation. Throws EvalError for generators absent from the
/// active space, arity mismatches, and division by a non-scalar.
Value evaluate(const Expr& e, const EvalContext& ctx);

/// Evaluates and coerces to an arity-1 element of the space (scalars
/// become multiples of the unit); throws EvalError otherwise.
Element evaluate_in_space(const Expr& e, const EvalContext& ctx);
/// Same coercion onto the Hopf side.
Element evaluate_in_hopf(const Expr& e, const EvalContext& ctx);

}  // namespace qcomm
