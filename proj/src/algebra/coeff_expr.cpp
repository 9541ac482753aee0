#include "homlie/coeff_expr.hpp"

namespace homlie {

std::string Affine::to_string() const {
  std::string out;
  auto term = [&out](long k, const char* var) {
    if (k == 0) return;
    if (out.empty()) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    const long a = k < 0 ? -k : k;
    if (a != 1) out += std::to_string(a) + "*";
    out += var;
  };
  term(m, "m");
  term(n, "n");
  if (c != 0 || out.empty()) {
    if (out.empty()) {
      out = std::to_string(c);
    } else {
      out += (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
    }
  }
  return out;
}

struct CoeffExpr::Node {
  Kind kind;
  Integer value;
  Affine affine;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const CoeffExpr::Node>;

}  // namespace

CoeffExpr::CoeffExpr() : node_(std::make_shared<Node>(Node{Kind::Integer, 0, {}, nullptr, nullptr})) {}

CoeffExpr CoeffExpr::integer(const Integer& v) {
  return CoeffExpr(std::make_shared<Node>(Node{Kind::Integer, v, {}, nullptr, nullptr}));
}
CoeffExpr CoeffExpr::q() { return CoeffExpr(std::make_shared<Node>(Node{Kind::Q, 0, {}, nullptr, nullptr})); }
CoeffExpr CoeffExpr::var_m() { return CoeffExpr(std::make_shared<Node>(Node{Kind::VarM, 0, {}, nullptr, nullptr})); }
CoeffExpr CoeffExpr::var_n() { return CoeffExpr(std::make_shared<Node>(Node{Kind::VarN, 0, {}, nullptr, nullptr})); }

CoeffExpr CoeffExpr::pow(const CoeffExpr& base, const Affine& exponent) {
  return CoeffExpr(std::make_shared<Node>(Node{Kind::Pow, 0, exponent, base.node_, nullptr}));
}
CoeffExpr CoeffExpr::qbr(const Affine& arg) {
  return CoeffExpr(std::make_shared<Node>(Node{Kind::Qbr, 0, arg, nullptr, nullptr}));
}
CoeffExpr CoeffExpr::qnm(const Affine& arg) {
  return CoeffExpr(std::make_shared<Node>(Node{Kind::Qnm, 0, arg, nullptr, nullptr}));
}

CoeffExpr operator+(const CoeffExpr& a, const CoeffExpr& b) {
  return CoeffExpr(std::make_shared<CoeffExpr::Node>(CoeffExpr::Node{CoeffExpr::Kind::Add, 0, {}, a.node_, b.node_}));
}
CoeffExpr operator-(const CoeffExpr& a, const CoeffExpr& b) {
  return CoeffExpr(std::make_shared<CoeffExpr::Node>(CoeffExpr::Node{CoeffExpr::Kind::Sub, 0, {}, a.node_, b.node_}));
}
CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
  return CoeffExpr(std::make_shared<CoeffExpr::Node>(CoeffExpr::Node{CoeffExpr::Kind::Mul, 0, {}, a.node_, b.node_}));
}
CoeffExpr operator/(const CoeffExpr& a, const CoeffExpr& b) {
  return CoeffExpr(std::make_shared<CoeffExpr::Node>(CoeffExpr::Node{CoeffExpr::Kind::Div, 0, {}, a.node_, b.node_}));
}
CoeffExpr operator-(const CoeffExpr& a) {
  return CoeffExpr(std::make_shared<CoeffExpr::Node>(CoeffExpr::Node{CoeffExpr::Kind::Neg, 0, {}, a.node_, nullptr}));
}

CoeffExpr::Kind CoeffExpr::kind() const { return node_->kind; }

namespace {

bool uses_vars(const CoeffExpr::Node& node) {
  switch (node.kind) {
    case CoeffExpr::Kind::VarM:
    case CoeffExpr::Kind::VarN:
      return true;
    case CoeffExpr::Kind::Qbr:
    case CoeffExpr::Kind::Qnm:
      return !node.affine.is_constant();
    case CoeffExpr::Kind::Pow:
      return !node.affine.is_constant() || uses_vars(*node.lhs);
    default:
      break;
  }
  return (node.lhs && uses_vars(*node.lhs)) || (node.rhs && uses_vars(*node.rhs));
}

QRational eval(const CoeffExpr::Node& node, long m, long n) {
  using K = CoeffExpr::Kind;
  switch (node.kind) {
    case K::Integer:
      return QRational(Rational(node.value));
    case K::Q:
      return QRational::q_power(1);
    case K::VarM:
      return QRational(m);
    case K::VarN:
      return QRational(n);
    case K::Add:
      return eval(*node.lhs, m, n) + eval(*node.rhs, m, n);
    case K::Sub:
      return eval(*node.lhs, m, n) - eval(*node.rhs, m, n);
    case K::Mul:
      return eval(*node.lhs, m, n) * eval(*node.rhs, m, n);
    case K::Div:
      return eval(*node.lhs, m, n) / eval(*node.rhs, m, n);
    case K::Neg:
      return -eval(*node.lhs, m, n);
    case K::Pow: {
      const long e = node.affine(m, n);
      if (node.lhs->kind == K::Q) return QRational::q_power(static_cast<int>(e));
      return eval(*node.lhs, m, n).pow(static_cast<int>(e));
    }
    case K::Qbr:
      return q_bracket_number(static_cast<int>(node.affine(m, n)));
    case K::Qnm:
      return q_brace_number(static_cast<int>(node.affine(m, n)));
  }
  return {};
}

int precedence(const CoeffExpr::Node& node) {
  using K = CoeffExpr::Kind;
  switch (node.kind) {
    case K::Add:
    case K::Sub:
      return 1;
    case K::Mul:
    case K::Div:
      return 2;
    case K::Neg:
      return 3;
    case K::Integer:
      return node.value < 0 ? 3 : 5;
    case K::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render_exponent(const Affine& e) {
  if (e.is_constant()) return std::to_string(e.c);
  if (e.c == 0 && (e.m == 0 || e.n == 0)) {
    const long k = e.m != 0 ? e.m : e.n;
    const char* var = e.m != 0 ? "m" : "n";
    if (k == 1) return var;
    if (k == -1) return std::string("-") + var;
  }
  return "(" + e.to_string() + ")";
}

}  // namespace

bool CoeffExpr::uses_degree_vars() const { return uses_vars(*node_); }

QRational CoeffExpr::evaluate(long m, long n) const { return eval(*node_, m, n); }

std::string CoeffExpr::render(const Node& node, int parent_prec) {
  const int prec = precedence(node);
  std::string out;
  switch (node.kind) {
    case Kind::Integer:
      out = node.value.get_str();
      break;
    case Kind::Q:
      out = "q";
      break;
    case Kind::VarM:
      out = "m";
      break;
    case Kind::VarN:
      out = "n";
      break;
    case Kind::Add:
      out = render(*node.lhs, 1) + " + " + render(*node.rhs, 2);
      break;
    case Kind::Sub:
      out = render(*node.lhs, 1) + " - " + render(*node.rhs, 2);
      break;
    case Kind::Mul:
      out = render(*node.lhs, 2) + " * " + render(*node.rhs, 3);
      break;
    case Kind::Div:
      out = render(*node.lhs, 2) + " / " + render(*node.rhs, 3);
      break;
    case Kind::Neg:
      out = "-" + render(*node.lhs, 3);
      break;
    case Kind::Pow:
      out = render(*node.lhs, 5) + "^" + render_exponent(node.affine);
      break;
    case Kind::Qbr:
      out = "qbr(" + node.affine.to_string() + ")";
      break;
    case Kind::Qnm:
      out = "qnm(" + node.affine.to_string() + ")";
      break;
  }
  if (prec < parent_prec) return "(" + out + ")";
  return out;
}

std::string CoeffExpr::to_string() const { return render(*node_, 0); }

}  // namespace homlie
