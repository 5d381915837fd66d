#pragma once

// Closed-form radial expressions in the variable s = r^2.
//
// Grammar (JSON):
//   number                      constant
//   "s"                         the radial variable
//   "<name>"                    named parameter, resolved against a params map
//   {"op": <op>, "args": [...]} with op one of
//       add, sub, mul, div (two or more / exactly two args), neg, sqrt, log,
//       exp (one arg), pow (two args)
//
// Expressions are immutable and can be evaluated on jets, which gives exact
// derivatives to fourth order, and differentiated symbolically in s.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "aekahler/jet.hpp"

namespace aek {

using Params = std::map<std::string, double>;

class Expression {
 public:
  enum class Op { constant, variable, param, add, sub, mul, div, neg, sqrt, log, exp, pow };

  Expression();  // the constant 0

  static Expression constant(double c);
  static Expression s();
  static Expression param(std::string name);

  friend Expression operator+(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a, const Expression& b);
  friend Expression operator*(const Expression& a, const Expression& b);
  friend Expression operator/(const Expression& a, const Expression& b);
  friend Expression operator-(const Expression& a);
  friend Expression sqrt(const Expression& a);
  friend Expression log(const Expression& a);
  friend Expression exp(const Expression& a);
  friend Expression pow(const Expression& a, const Expression& b);

  Op op() const;
  double constant_value() const;
  const std::string& name() const;
  const std::vector<Expression>& args() const;
  bool is_constant(double c) const;

  /// Evaluates with s replaced by the given jet.  Domain violations throw
  /// EvaluationError naming the offending sub-expression.
  Jet4 eval(const Jet4& s, const Params& params) const;
  double eval(double s, const Params& params) const;

  /// d/ds, lightly simplified (constant folding of 0 and 1 factors).
  Expression derivative() const;

  /// Replaces named parameters by constants.
  Expression bind(const Params& params) const;

  std::string to_string() const;

  nlohmann::json to_json() const;
  /// Throws ParseError with a JSON-pointer style path to the bad node.
  static Expression from_json(const nlohmann::json& j, const std::string& path = "");

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node);
  static Expression make(Op op, std::vector<Expression> args);

  std::shared_ptr<const Node> node_;
};

}  // namespace aek
