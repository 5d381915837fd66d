#include "aekahler/expression.hpp"

#include <sstream>

namespace aek {

struct Expression::Node {
  Op op;
  double value = 0.0;
  std::string name;
  std::vector<Expression> args;
};

namespace {

const char* op_name(Expression::Op op) {
  using Op = Expression::Op;
  switch (op) {
    case Op::add: return "add";
    case Op::sub: return "sub";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::neg: return "neg";
    case Op::sqrt: return "sqrt";
    case Op::log: return "log";
    case Op::exp: return "exp";
    case Op::pow: return "pow";
    default: return "?";
  }
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Expression::Expression() : Expression(constant(0.0)) {}

Expression::Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expression Expression::make(Op op, std::vector<Expression> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return Expression(std::move(n));
}

Expression Expression::constant(double c) {
  auto n = std::make_shared<Node>();
  n->op = Op::constant;
  n->value = c;
  return Expression(std::move(n));
}

Expression Expression::s() {
  auto n = std::make_shared<Node>();
  n->op = Op::variable;
  n->name = "s";
  return Expression(std::move(n));
}

Expression Expression::param(std::string name) {
  if (name == "s") return s();
  auto n = std::make_shared<Node>();
  n->op = Op::param;
  n->name = std::move(name);
  return Expression(std::move(n));
}

Expression::Op Expression::op() const { return node_->op; }
double Expression::constant_value() const { return node_->value; }
const std::string& Expression::name() const { return node_->name; }
const std::vector<Expression>& Expression::args() const { return node_->args; }
bool Expression::is_constant(double c) const {
  return node_->op == Op::constant && node_->value == c;
}

Expression operator+(const Expression& a, const Expression& b) {
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  if (a.op() == Expression::Op::constant && b.op() == Expression::Op::constant) {
    return Expression::constant(a.constant_value() + b.constant_value());
  }
  return Expression::make(Expression::Op::add, {a, b});
}

Expression operator-(const Expression& a, const Expression& b) {
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  if (a.op() == Expression::Op::constant && b.op() == Expression::Op::constant) {
    return Expression::constant(a.constant_value() - b.constant_value());
  }
  return Expression::make(Expression::Op::sub, {a, b});
}

Expression operator*(const Expression& a, const Expression& b) {
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expression::constant(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  if (a.op() == Expression::Op::constant && b.op() == Expression::Op::constant) {
    return Expression::constant(a.constant_value() * b.constant_value());
  }
  return Expression::make(Expression::Op::mul, {a, b});
}

Expression operator/(const Expression& a, const Expression& b) {
  if (a.is_constant(0.0)) return Expression::constant(0.0);
  if (b.is_constant(1.0)) return a;
  return Expression::make(Expression::Op::div, {a, b});
}

Expression operator-(const Expression& a) {
  if (a.op() == Expression::Op::constant) return Expression::constant(-a.constant_value());
  if (a.op() == Expression::Op::neg) return a.args()[0];
  return Expression::make(Expression::Op::neg, {a});
}

Expression sqrt(const Expression& a) { return Expression::make(Expression::Op::sqrt, {a}); }
Expression log(const Expression& a) { return Expression::make(Expression::Op::log, {a}); }
Expression exp(const Expression& a) { return Expression::make(Expression::Op::exp, {a}); }
Expression pow(const Expression& a, const Expression& b) {
  if (b.is_constant(1.0)) return a;
  if (b.is_constant(0.0)) return Expression::constant(1.0);
  return Expression::make(Expression::Op::pow, {a, b});
}

Jet4 Expression::eval(const Jet4& s, const Params& params) const {
  const auto& a = node_->args;
  try {
    switch (node_->op) {
      case Op::constant: return Jet4::constant(node_->value);
      case Op::variable: return s;
      case Op::param: {
        auto it = params.find(node_->name);
        if (it == params.end()) {
          throw EvaluationError("unbound parameter '" + node_->name + "'");
        }
        return Jet4::constant(it->second);
      }
      case Op::add: {
        Jet4 acc = a[0].eval(s, params);
        for (std::size_t i = 1; i < a.size(); ++i) acc += a[i].eval(s, params);
        return acc;
      }
      case Op::sub: return a[0].eval(s, params) - a[1].eval(s, params);
      case Op::mul: {
        Jet4 acc = a[0].eval(s, params);
        for (std::size_t i = 1; i < a.size(); ++i) acc = acc * a[i].eval(s, params);
        return acc;
      }
      case Op::div: {
        const Jet4 den = a[1].eval(s, params);
        if (den[0] == 0.0) throw EvaluationError("division by zero");
        return a[0].eval(s, params) / den;
      }
      case Op::neg: return -a[0].eval(s, params);
      case Op::sqrt: return aek::sqrt(a[0].eval(s, params));
      case Op::log: return aek::log(a[0].eval(s, params));
      case Op::exp: return aek::exp(a[0].eval(s, params));
      case Op::pow: return aek::pow(a[0].eval(s, params), a[1].eval(s, params));
    }
  } catch (const EvaluationError& e) {
    const std::string what = e.what();
    // Annotate only at the innermost failing node.
    if (what.find(" in ") != std::string::npos) throw;
    throw EvaluationError(what + " in " + to_string());
  }
  return Jet4{};
}

double Expression::eval(double s, const Params& params) const {
  return eval(Jet4::constant(s), params)[0];
}

Expression Expression::derivative() const {
  const auto& a = node_->args;
  switch (node_->op) {
    case Op::constant:
    case Op::param: return constant(0.0);
    case Op::variable: return constant(1.0);
    case Op::add: {
      Expression acc = a[0].derivative();
      for (std::size_t i = 1; i < a.size(); ++i) acc = acc + a[i].derivative();
      return acc;
    }
    case Op::sub: return a[0].derivative() - a[1].derivative();
    case Op::mul: {
      // Product of n factors, differentiated pairwise from the left.
      Expression left = a[0];
      Expression dleft = a[0].derivative();
      for (std::size_t i = 1; i < a.size(); ++i) {
        dleft = dleft * a[i] + left * a[i].derivative();
        left = left * a[i];
      }
      return dleft;
    }
    case Op::div: {
      const Expression& u = a[0];
      const Expression& v = a[1];
      return (u.derivative() * v - u * v.derivative()) / (v * v);
    }
    case Op::neg: return -a[0].derivative();
    case Op::sqrt: return a[0].derivative() / (constant(2.0) * *this);
    case Op::log: return a[0].derivative() / a[0];
    case Op::exp: return a[0].derivative() * *this;
    case Op::pow: {
      const Expression& base = a[0];
      const Expression& e = a[1];
      const Expression de = e.derivative();
      if (de.is_constant(0.0)) {
        return e * pow(base, e - constant(1.0)) * base.derivative();
      }
      return *this * (de * log(base) + e * base.derivative() / base);
    }
  }
  return constant(0.0);
}

Expression Expression::bind(const Params& params) const {
  if (node_->op == Op::param) {
    auto it = params.find(node_->name);
    return it == params.end() ? *this : constant(it->second);
  }
  if (node_->args.empty()) return *this;
  std::vector<Expression> args;
  args.reserve(node_->args.size());
  for (const auto& x : node_->args) args.push_back(x.bind(params));
  return make(node_->op, std::move(args));
}

std::string Expression::to_string() const {
  const auto& a = node_->args;
  switch (node_->op) {
    case Op::constant: return format_number(node_->value);
    case Op::variable:
    case Op::param: return node_->name;
    case Op::add:
    case Op::mul: {
      const char* sym = node_->op == Op::add ? " + " : " * ";
      std::string out = "(";
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += sym;
        out += a[i].to_string();
      }
      return out + ")";
    }
    case Op::sub: return "(" + a[0].to_string() + " - " + a[1].to_string() + ")";
    case Op::div: return "(" + a[0].to_string() + " / " + a[1].to_string() + ")";
    case Op::pow: return "pow(" + a[0].to_string() + ", " + a[1].to_string() + ")";
    case Op::neg: return "-" + a[0].to_string();
    default: return std::string(op_name(node_->op)) + "(" + a[0].to_string() + ")";
  }
}

nlohmann::json Expression::to_json() const {
  switch (node_->op) {
    case Op::constant: return node_->value;
    case Op::variable:
    case Op::param: return node_->name;
    default: {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& x : node_->args) args.push_back(x.to_json());
      return nlohmann::json{{"op", op_name(node_->op)}, {"args", args}};
    }
  }
}

Expression Expression::from_json(const nlohmann::json& j, const std::string& path) {
  const std::string where = path.empty() ? "/" : path;
  if (j.is_number()) return constant(j.get<double>());
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name.empty()) throw ParseError(where + ": empty identifier");
    return param(name);
  }
  if (!j.is_object()) throw ParseError(where + ": expected number, identifier or {op, args}");
  if (!j.contains("op") || !j["op"].is_string()) {
    throw ParseError(where + ": node is missing a string 'op'");
  }
  if (!j.contains("args") || !j["args"].is_array()) {
    throw ParseError(where + ": node is missing an 'args' array");
  }
  const std::string op = j["op"].get<std::string>();
  std::vector<Expression> args;
  for (std::size_t i = 0; i < j["args"].size(); ++i) {
    args.push_back(from_json(j["args"][i], path + "/args/" + std::to_string(i)));
  }
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
      throw ParseError(where + ": op '" + op + "' takes " + std::to_string(lo) +
                       (hi != lo ? "+" : "") + " argument(s), got " +
                       std::to_string(args.size()));
    }
  };
  constexpr std::size_t many = static_cast<std::size_t>(-1);
  if (op == "add") { arity(2, many); return make(Op::add, std::move(args)); }
  if (op == "mul") { arity(2, many); return make(Op::mul, std::move(args)); }
  if (op == "sub") { arity(2, 2); return make(Op::sub, std::move(args)); }
  if (op == "div") { arity(2, 2); return make(Op::div, std::move(args)); }
  if (op == "pow") { arity(2, 2); return make(Op::pow, std::move(args)); }
  if (op == "neg") { arity(1, 1); return make(Op::neg, std::move(args)); }
  if (op == "sqrt") { arity(1, 1); return make(Op::sqrt, std::move(args)); }
  if (op == "log") { arity(1, 1); return make(Op::log, std::move(args)); }
  if (op == "exp") { arity(1, 1); return make(Op::exp, std::move(args)); }
  throw ParseError(where + ": unknown op '" + op + "'");
}

}  // namespace aek
