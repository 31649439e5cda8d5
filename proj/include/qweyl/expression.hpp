#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qweyl/monomial.hpp"

namespace qweyl {

class Expr;

struct ExprNode;

// Immutable noncommutative rational expression.  Nodes are shared, so
// substitution results form a DAG.  A/B means A * B^{-1}.
class Expr {
 public:
  enum class Kind { Monomial, Sum, Prod, Inv };

  static Expr monomial(SystemPtr sys, Monomial m);
  static Expr sum(std::vector<Expr> terms);
  static Expr prod(std::vector<Expr> factors);
  static Expr inv(const Expr& e);

  Kind kind() const;
  const Monomial& mono() const;
  const std::vector<Expr>& children() const;
  const GeneratorSystem& system() const;
  const SystemPtr& system_ptr() const;
  const void* id() const { return node_.get(); }
  std::size_t hash() const;

  bool is_monomial() const { return kind() == Kind::Monomial; }
  bool is_zero() const;
  bool is_one() const;

  // number of distinct nodes in the DAG
  std::size_t node_count() const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  Expr::Kind kind;
  SystemPtr sys;
  Monomial mono;
  std::vector<Expr> kids;
  std::size_t hash = 0;
};

bool structurally_equal(const Expr& a, const Expr& b);

Expr constant(const SystemPtr& sys, const Rational& c);
Expr qpower(const SystemPtr& sys, long k);
Expr generator(const SystemPtr& sys, const std::string& name, int power = 1);
Expr generator(const SystemPtr& sys, int index, int power = 1);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator*(const Rational& c, const Expr& a);
Expr operator+(const Rational& c, const Expr& a);
Expr operator+(const Expr& a, const Rational& c);
Expr inv(const Expr& e);
Expr pow(const Expr& e, int k);

// Rebuilds through the smart constructors, merging like monomials in sums,
// adjacent monomials in products, and cancelling adjacent X * X^{-1}.
Expr canonicalize_light(const Expr& e);

// Set of generator indices that occur anywhere in e.
std::vector<bool> support(const Expr& e);

// Ring endomorphism (anti = false) or anti-endomorphism (anti = true)
// determined by the images of all generators; q is fixed.
struct Endomorphism {
  SystemPtr sys;
  std::vector<Expr> images;
  bool anti = false;
  std::string name;

  static Endomorphism identity(const SystemPtr& sys);
  Expr operator()(const Expr& e) const;
};

// Applies phi to e; memoized over shared nodes.
Expr substitute(const Expr& e, const Endomorphism& phi);

// (f o g)(x) = f(g(x))
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

std::string to_string(const Expr& e);

// Parenthesized wraps every compound operand; Compact drops redundant parentheses.
enum class PrintStyle { Compact, Parenthesized };
std::string to_string(const Expr& e, PrintStyle style);

// Named expressions recognised by the parser in addition to generators.
using AliasTable = std::map<std::string, Expr>;

Expr parse_expression(const std::string& text, const SystemPtr& sys,
                      const AliasTable& aliases = {});

}  // namespace qweyl
