#pragma once

// Arithmetic over named metrics, used by catalog entries to state per-point
// objectives and constraint quantities, e.g. "-mach*CL/CD + (mach^2*CL - mach*cl_target)^2".
//
// Grammar: + - * / ^ (right-associative), unary minus, parentheses, numbers,
// identifiers, and calls to abs min max sqrt pow exp log clamp car_cd.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "shapebench/errors.hpp"
#include "shapebench/problems/formulas.hpp"

namespace shapebench {

class Expression {
 public:
  using Lookup = std::function<std::optional<double>(std::string_view)>;

  Expression() = default;

  explicit Expression(std::string source) : source_(std::move(source)) {
    Parser p{source_, 0};
    root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != source_.size()) p.fail("unexpected trailing input");
  }

  const std::string& source() const { return source_; }
  bool empty() const { return root_ == nullptr; }

  double evaluate(const Lookup& lookup) const {
    if (!root_) throw ConfigError("evaluating an empty expression");
    return eval(*root_, lookup);
  }

  /// Identifiers referenced by the expression.
  std::set<std::string> identifiers() const {
    std::set<std::string> out;
    if (root_) collect(*root_, out);
    return out;
  }

 private:
  struct Node {
    enum class Kind { number, ident, neg, add, sub, mul, div, pow, call } kind;
    double value = 0.0;
    std::string name;
    std::vector<std::shared_ptr<const Node>> args;
  };
  using NodePtr = std::shared_ptr<const Node>;

  struct Parser {
    std::string_view text;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& what) const {
      throw ConfigError("expression '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
    }
    void skip_ws() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(char c) {
      skip_ws();
      if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    static NodePtr make(Node::Kind k, std::vector<NodePtr> args) {
      auto n = std::make_shared<Node>();
      n->kind = k;
      n->args = std::move(args);
      return n;
    }
    NodePtr parse_expr() {
      NodePtr lhs = parse_term();
      for (;;) {
        if (accept('+')) {
          lhs = make(Node::Kind::add, {lhs, parse_term()});
        } else if (accept('-')) {
          lhs = make(Node::Kind::sub, {lhs, parse_term()});
        } else {
          return lhs;
        }
      }
    }
    NodePtr parse_term() {
      NodePtr lhs = parse_unary();
      for (;;) {
        if (accept('*')) {
          lhs = make(Node::Kind::mul, {lhs, parse_unary()});
        } else if (accept('/')) {
          lhs = make(Node::Kind::div, {lhs, parse_unary()});
        } else {
          return lhs;
        }
      }
    }
    NodePtr parse_unary() {
      if (accept('-')) return make(Node::Kind::neg, {parse_unary()});
      if (accept('+')) return parse_unary();
      NodePtr base = parse_primary();
      if (accept('^')) return make(Node::Kind::pow, {base, parse_unary()});
      return base;
    }
    NodePtr parse_primary() {
      skip_ws();
      if (pos >= text.size()) fail("unexpected end");
      const char c = text[pos];
      if (accept('(')) {
        NodePtr e = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return e;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' || text[pos] == 'e' ||
                text[pos] == 'E' ||
                ((text[pos] == '+' || text[pos] == '-') && pos > start &&
                 (text[pos - 1] == 'e' || text[pos - 1] == 'E')))) {
          ++pos;
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::number;
        try {
          n->value = std::stod(std::string(text.substr(start, pos - start)));
        } catch (const std::exception&) {
          fail("bad number");
        }
        return n;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        auto n = std::make_shared<Node>();
        n->name = std::string(text.substr(start, pos - start));
        if (accept('(')) {
          n->kind = Node::Kind::call;
          if (!accept(')')) {
            do {
              n->args.push_back(parse_expr());
            } while (accept(','));
            if (!accept(')')) fail("expected ')' after arguments");
          }
          check_arity(*n);
        } else {
          n->kind = Node::Kind::ident;
        }
        return n;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    void check_arity(const Node& n) const {
      const auto k = n.args.size();
      const std::string& f = n.name;
      bool ok = false;
      if (f == "abs" || f == "sqrt" || f == "exp" || f == "log") ok = k == 1;
      else if (f == "pow" || f == "car_cd") ok = k == 2;
      else if (f == "min" || f == "max") ok = k >= 1;
      else if (f == "clamp") ok = k == 3;
      else fail("unknown function '" + f + "'");
      if (!ok) fail("wrong argument count for '" + f + "'");
    }
  };

  static double eval(const Node& n, const Lookup& lookup) {
    switch (n.kind) {
      case Node::Kind::number: return n.value;
      case Node::Kind::ident: {
        auto v = lookup(n.name);
        if (!v) throw EvaluationError("metric '" + n.name + "' is not available");
        return *v;
      }
      case Node::Kind::neg: return -eval(*n.args[0], lookup);
      case Node::Kind::add: return eval(*n.args[0], lookup) + eval(*n.args[1], lookup);
      case Node::Kind::sub: return eval(*n.args[0], lookup) - eval(*n.args[1], lookup);
      case Node::Kind::mul: return eval(*n.args[0], lookup) * eval(*n.args[1], lookup);
      case Node::Kind::div: return eval(*n.args[0], lookup) / eval(*n.args[1], lookup);
      case Node::Kind::pow: return std::pow(eval(*n.args[0], lookup), eval(*n.args[1], lookup));
      case Node::Kind::call: {
        std::vector<double> a;
        a.reserve(n.args.size());
        for (const auto& arg : n.args) a.push_back(eval(*arg, lookup));
        const std::string& f = n.name;
        if (f == "abs") return std::abs(a[0]);
        if (f == "sqrt") return std::sqrt(a[0]);
        if (f == "exp") return std::exp(a[0]);
        if (f == "log") return std::log(a[0]);
        if (f == "pow") return std::pow(a[0], a[1]);
        if (f == "car_cd") return car_drag_coefficient(a[0], a[1]);
        if (f == "clamp") return std::min(std::max(a[0], a[1]), a[2]);
        if (f == "min") return *std::min_element(a.begin(), a.end());
        if (f == "max") return *std::max_element(a.begin(), a.end());
        break;
      }
    }
    throw ConfigError("corrupt expression tree");
  }

  static void collect(const Node& n, std::set<std::string>& out) {
    if (n.kind == Node::Kind::ident) out.insert(n.name);
    for (const auto& a : n.args) collect(*a, out);
  }

  std::string source_;
  NodePtr root_;
};

}  // namespace shapebench
