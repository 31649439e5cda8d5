#include <cctype>
#include <sstream>

#include "qweyl/expression.hpp"

namespace qweyl {

namespace {

enum Prec { kSum = 0, kProd = 1, kAtom = 2 };

bool negative_lead(const Expr& e) { return e.is_monomial() && e.mono().scalar < 0; }

std::string print(const Expr& e, int ctx);

std::string print_monomial(const Expr& e, int ctx) {
  const Monomial& m = e.mono();
  std::string s = to_string(m, e.system());
  bool compound = s.find('*') != std::string::npos || s.find('/') != std::string::npos ||
                  s.front() == '-' || s.find('^') != std::string::npos;
  if (ctx == kAtom && compound) return "(" + s + ")";
  if (ctx == kProd && (s.front() == '-' || s.find('/') != std::string::npos)) return "(" + s + ")";
  return s;
}

std::string print(const Expr& e, int ctx) {
  switch (e.kind()) {
    case Expr::Kind::Monomial:
      return print_monomial(e, ctx);
    case Expr::Kind::Sum: {
      std::ostringstream os;
      bool first = true;
      for (const auto& k : e.children()) {
        if (first) {
          os << print(k, kSum);
        } else if (negative_lead(k)) {
          Monomial m = k.mono();
          m.scalar = -m.scalar;
          os << " - " << print_monomial(Expr::monomial(e.system_ptr(), m), kProd);
        } else {
          os << " + " << print(k, kSum);
        }
        first = false;
      }
      return ctx > kSum ? "(" + os.str() + ")" : os.str();
    }
    case Expr::Kind::Prod: {
      std::ostringstream os;
      bool first = true;
      for (const auto& k : e.children()) {
        if (!first) os << '*';
        os << print(k, kProd);
        first = false;
      }
      return ctx > kProd ? "(" + os.str() + ")" : os.str();
    }
    case Expr::Kind::Inv:
      return print(e.children()[0], kAtom) + "^-1";
  }
  return "";
}

std::string print_full(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Monomial:
      return print_monomial(e, kAtom);
    case Expr::Kind::Sum:
    case Expr::Kind::Prod: {
      const char* sep = e.kind() == Expr::Kind::Sum ? " + " : "*";
      std::string s = "(";
      bool first = true;
      for (const auto& k : e.children()) {
        if (!first) s += sep;
        s += print_full(k);
        first = false;
      }
      return s + ")";
    }
    case Expr::Kind::Inv:
      return print_full(e.children()[0]) + "^-1";
  }
  return "";
}

class Parser {
 public:
  Parser(const std::string& text, const SystemPtr& sys, const AliasTable& aliases)
      : s_(text), sys_(sys), aliases_(aliases) {}

  Expr run() {
    Expr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError("parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (eat('*'))
        e = e * unary();
      else if (eat('/'))
        e = e / unary();
      else
        return e;
    }
  }

  Expr unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!eat('^')) return base;
    bool paren = eat('(');
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long k = std::stol(s_.substr(start, pos_ - start));
    if (paren && !eat(')')) fail("expected ')'");
    return pow(base, static_cast<int>(neg ? -k : k));
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(sys_, Rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "q") return qpower(sys_, 1);
      if (auto i = sys_->index(id)) return generator(sys_, *i);
      auto it = aliases_.find(id);
      if (it != aliases_.end()) return it->second;
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  SystemPtr sys_;
  const AliasTable& aliases_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Expr& e) { return print(e, kSum); }

std::string to_string(const Expr& e, PrintStyle style) {
  return style == PrintStyle::Compact ? print(e, kSum) : print_full(e);
}

Expr parse_expression(const std::string& text, const SystemPtr& sys, const AliasTable& aliases) {
  return Parser(text, sys, aliases).run();
}

}  // namespace qweyl
