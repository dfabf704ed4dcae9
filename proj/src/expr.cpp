#include "oscint/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 8> kFunctions{{
    {"sin", Function::sin},
    {"cos", Function::cos},
    {"exp", Function::exp},
    {"sqrt", Function::sqrt},
    {"abs", Function::abs},
    {"asin", Function::asin},
    {"atan", Function::atan},
    {"log", Function::log},
}};

std::shared_ptr<ExprNode> make_node(NodeKind kind) {
  auto n = std::make_shared<ExprNode>();
  n->kind = kind;
  return n;
}

bool is_real(cplx z) { return z.imag() == 0.0; }

cplx apply(Function f, cplx z) {
  // Real arguments inside the real domain take the real-valued routines, which
  // are correctly rounded more often than their complex counterparts.
  const double r = z.real();
  switch (f) {
    case Function::sin: return is_real(z) ? cplx(std::sin(r)) : std::sin(z);
    case Function::cos: return is_real(z) ? cplx(std::cos(r)) : std::cos(z);
    case Function::exp: return is_real(z) ? cplx(std::exp(r)) : std::exp(z);
    case Function::sqrt: return is_real(z) && r >= 0.0 ? cplx(std::sqrt(r)) : std::sqrt(z);
    case Function::abs: return cplx(std::abs(z));
    case Function::asin:
      return is_real(z) && std::abs(r) <= 1.0 ? cplx(std::asin(r)) : std::asin(z);
    case Function::atan: return is_real(z) ? cplx(std::atan(r)) : std::atan(z);
    case Function::log: return is_real(z) && r > 0.0 ? cplx(std::log(r)) : std::log(z);
  }
  return {NAN, NAN};
}

cplx power(cplx base, cplx exponent) {
  if (is_real(exponent)) {
    const double e = exponent.real();
    if (is_real(base) && (base.real() >= 0.0 || e == std::trunc(e)))
      return cplx(std::pow(base.real(), e));
    if (base == cplx{} && e > 0.0) return cplx{};
  }
  if (base == cplx{} && exponent.real() > 0.0) return cplx{};
  return std::pow(base, exponent);
}

cplx eval(const ExprNode& n, cplx x) {
  switch (n.kind) {
    case NodeKind::number: return cplx(n.value);
    case NodeKind::imaginary_unit: return {0.0, 1.0};
    case NodeKind::pi: return cplx(std::numbers::pi);
    case NodeKind::variable: return x;
    case NodeKind::negate: return -eval(*n.children[0], x);
    case NodeKind::add: return eval(*n.children[0], x) + eval(*n.children[1], x);
    case NodeKind::subtract: return eval(*n.children[0], x) - eval(*n.children[1], x);
    case NodeKind::multiply: return eval(*n.children[0], x) * eval(*n.children[1], x);
    case NodeKind::divide: return eval(*n.children[0], x) / eval(*n.children[1], x);
    case NodeKind::power: return power(eval(*n.children[0], x), eval(*n.children[1], x));
    case NodeKind::call: return apply(n.function, eval(*n.children[0], x));
  }
  return {NAN, NAN};
}

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression parse() {
    Expression e = expr();
    skip_space();
    if (pos_ < src_.size())
      fail("unexpected '" + std::string(1, src_[pos_]) + "'",
           {"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    std::string what = "parse error at offset " + std::to_string(pos_) + ": " + message;
    if (!expected.empty()) {
      what += "; expected ";
      for (std::size_t k = 0; k < expected.size(); ++k) {
        if (k) what += ", ";
        what += expected[k];
      }
    }
    throw ParseError(what, pos_, std::move(expected));
  }

  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression expr() {
    Expression lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = Expression::binary(NodeKind::add, lhs, term());
      else if (accept('-'))
        lhs = Expression::binary(NodeKind::subtract, lhs, term());
      else
        return lhs;
    }
  }

  Expression term() {
    Expression lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = Expression::binary(NodeKind::multiply, lhs, unary());
      else if (accept('/'))
        lhs = Expression::binary(NodeKind::divide, lhs, unary());
      else
        return lhs;
    }
  }

  Expression unary() {
    if (accept('-')) return Expression::unary(NodeKind::negate, unary());
    return power();
  }

  Expression power() {
    Expression base = primary();
    if (accept('^')) return Expression::binary(NodeKind::power, base, unary());
    return base;
  }

  Expression primary() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input", {"number", "identifier", "(", "-"});
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = expr();
      if (!accept(')')) fail("unbalanced parenthesis", {")"});
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'", {"number", "identifier", "(", "-"});
  }

  Expression number() {
    const std::size_t start = pos_;
    const auto digits = [this] {
      std::size_t count = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number", {"digit"});
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent", {"digit"});
    }
    double v = 0.0;
    const char* first = src_.data() + start;
    const char* last = src_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      pos_ = start;
      fail("number out of range", {"finite number"});
    }
    return Expression::number(v);
  }

  Expression identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                  src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return Expression::constant(NodeKind::variable);
    if (name == "i") return Expression::constant(NodeKind::imaginary_unit);
    if (name == "pi") return Expression::constant(NodeKind::pi);
    for (const auto& [fname, f] : kFunctions) {
      if (name != fname) continue;
      if (!accept('(')) fail("function " + std::string(name) + " needs an argument", {"("});
      Expression arg = expr();
      if (!accept(')')) fail("unbalanced parenthesis", {")"});
      return Expression::call(f, arg);
    }
    throw UnknownIdentifier("parse error at offset " + std::to_string(start) +
                                ": unknown identifier '" + std::string(name) + "'",
                            start, std::string(name));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// Binding strength as seen by the parser: 1 sums, 2 products, 3 negation,
// 4 powers, 5 atoms.
int precedence(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::add:
    case NodeKind::subtract: return 1;
    case NodeKind::multiply:
    case NodeKind::divide: return 2;
    case NodeKind::negate: return 3;
    case NodeKind::power: return 4;
    default: return 5;
  }
}

void print(const ExprNode& n, std::string& out);

void print_operand(const ExprNode& n, bool parens, std::string& out) {
  if (parens) out += '(';
  print(n, out);
  if (parens) out += ')';
}

void print(const ExprNode& n, std::string& out) {
  const int p = precedence(n);
  switch (n.kind) {
    case NodeKind::number: {
      std::array<char, 32> buf{};
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), n.value,
                                     std::chars_format::general, 17);
      out.append(buf.data(), res.ptr);
      return;
    }
    case NodeKind::imaginary_unit: out += 'i'; return;
    case NodeKind::pi: out += "pi"; return;
    case NodeKind::variable: out += 'x'; return;
    case NodeKind::negate:
      out += '-';
      print_operand(*n.children[0], precedence(*n.children[0]) < 3, out);
      return;
    case NodeKind::power:
      print_operand(*n.children[0], precedence(*n.children[0]) < 5, out);
      out += '^';
      print_operand(*n.children[1], precedence(*n.children[1]) < 3, out);
      return;
    case NodeKind::call:
      out += to_string(n.function);
      out += '(';
      print(*n.children[0], out);
      out += ')';
      return;
    default: break;
  }
  static constexpr std::array<char, 4> ops{'+', '-', '*', '/'};
  const char op = ops[static_cast<std::size_t>(n.kind) - static_cast<std::size_t>(NodeKind::add)];
  print_operand(*n.children[0], precedence(*n.children[0]) < p, out);
  out += op;
  print_operand(*n.children[1], precedence(*n.children[1]) <= p, out);
}

}  // namespace

std::string_view to_string(Function f) {
  for (const auto& [name, fn] : kFunctions)
    if (fn == f) return name;
  return "?";
}

cplx Expression::evaluate(cplx x) const { return eval(*root_, x); }

Amplitude Expression::as_amplitude() const {
  return [root = root_](double x) { return eval(*root, cplx(x)); };
}

Expression Expression::number(double v) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw Error("number literals must be finite and non-negative; negate them instead");
  auto n = make_node(NodeKind::number);
  n->value = v;
  return Expression(std::move(n));
}

Expression Expression::constant(NodeKind kind) { return Expression(make_node(kind)); }

Expression Expression::unary(NodeKind kind, Expression operand) {
  auto n = make_node(kind);
  n->children.push_back(operand.root_);
  return Expression(std::move(n));
}

Expression Expression::binary(NodeKind kind, Expression lhs, Expression rhs) {
  auto n = make_node(kind);
  n->children.push_back(lhs.root_);
  n->children.push_back(rhs.root_);
  return Expression(std::move(n));
}

Expression Expression::call(Function f, Expression argument) {
  auto n = make_node(NodeKind::call);
  n->function = f;
  n->children.push_back(argument.root_);
  return Expression(std::move(n));
}

bool operator==(const ExprNode& lhs, const ExprNode& rhs) {
  if (lhs.kind != rhs.kind || lhs.children.size() != rhs.children.size()) return false;
  if (lhs.kind == NodeKind::number && lhs.value != rhs.value) return false;
  if (lhs.kind == NodeKind::call && lhs.function != rhs.function) return false;
  for (std::size_t k = 0; k < lhs.children.size(); ++k)
    if (!(*lhs.children[k] == *rhs.children[k])) return false;
  return true;
}

Expression parse_amplitude(std::string_view source) { return Parser(source).parse(); }

std::string to_string(const Expression& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

}  // namespace oscint
