#ifndef OSCINT_EXPR_HPP
#define OSCINT_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "oscint/levin.hpp"

namespace oscint {

enum class NodeKind { number, imaginary_unit, pi, variable, negate, add, subtract, multiply, divide, power, call };

enum class Function { sin, cos, exp, sqrt, abs, asin, atan, log };

std::string_view to_string(Function f);

struct ExprNode {
  NodeKind kind = NodeKind::number;
  double value = 0.0;               // number literals
  Function function = Function::sin;  // calls
  std::vector<std::shared_ptr<const ExprNode>> children;
};

/// Immutable expression tree in the variable x, evaluated in complex arithmetic.
class Expression {
public:
  explicit Expression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

  const ExprNode& root() const noexcept { return *root_; }
  cplx evaluate(cplx x) const;
  cplx operator()(double x) const { return evaluate(cplx(x)); }
  /// Shares the tree, so the amplitude stays valid after this object dies.
  Amplitude as_amplitude() const;

  static Expression number(double v);
  static Expression constant(NodeKind kind);  // imaginary_unit, pi or variable
  static Expression unary(NodeKind kind, Expression operand);
  static Expression binary(NodeKind kind, Expression lhs, Expression rhs);
  static Expression call(Function f, Expression argument);

private:
  std::shared_ptr<const ExprNode> root_;
};

bool operator==(const ExprNode& lhs, const ExprNode& rhs);
inline bool operator==(const Expression& lhs, const Expression& rhs) {
  return lhs.root() == rhs.root();
}

/// Grammar, lowest precedence first:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'pi' | 'i' | 'x' | name '(' expr ')' | '(' expr ')'
/// Throws ParseError (with byte offset and expected tokens) or UnknownIdentifier.
Expression parse_amplitude(std::string_view source);

/// Source text that parses back to the same tree; numbers use 17 digits.
std::string to_string(const Expression& e);

}  // namespace oscint

#endif  // OSCINT_EXPR_HPP
