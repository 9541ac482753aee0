#include <sstream>

#include "homlie/dsl.hpp"

namespace homlie {

namespace {

std::string family_decl(const Family& f) {
  std::string out = "family " + f.name + " parity " + std::to_string(f.parity) + " degrees ";
  switch (f.domain) {
    case Family::Domain::AllIntegers:
      out += "int";
      break;
    case Family::Domain::Ungraded:
      out += "none";
      break;
    case Family::Domain::Finite: {
      out += "{";
      for (std::size_t i = 0; i < f.degrees.size(); ++i) out += (i ? ", " : "") + std::to_string(f.degrees[i]);
      out += "}";
      break;
    }
  }
  return out + ";";
}

std::string terms_text(const AlgebraPresentation& p, const std::vector<RuleTerm>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const RuleTerm& t = terms[i];
    if (i) out += " + ";
    const bool unit = t.coeff.kind() == CoeffExpr::Kind::Integer && t.coeff.to_string() == "1";
    if (!unit) {
      std::string c = t.coeff.to_string();
      const auto k = t.coeff.kind();
      if (k == CoeffExpr::Kind::Add || k == CoeffExpr::Kind::Sub) c = "(" + c + ")";
      out += c + " * ";
    }
    const Family& f = p.families[static_cast<std::size_t>(t.target)];
    out += f.name;
    if (f.domain != Family::Domain::Ungraded) out += "(" + t.degree.to_string() + ")";
  }
  return out;
}

std::string argument(const Family& f, char var) {
  if (f.domain == Family::Domain::Ungraded) return f.name;
  return f.name + "(" + std::string(1, var) + ")";
}

}  // namespace

std::string serialize(const AlgebraPresentation& p) {
  std::ostringstream out;
  out << "algebra " << p.name << ";\n";
  out << "mode " << (p.is_super() ? "super" : "lie") << ";\n";
  for (const auto& f : p.families) out << family_decl(f) << "\n";
  for (const auto& r : p.bracket_rules) {
    const Family& l = p.families[static_cast<std::size_t>(r.left)];
    const Family& rt = p.families[static_cast<std::size_t>(r.right)];
    out << "bracket [" << argument(l, r.left_var_is_m ? 'm' : 'n') << ", " << argument(rt, r.left_var_is_m ? 'n' : 'm')
        << "]";
    if (r.shift != 0) out << " shift " << r.shift;
    out << " = " << terms_text(p, r.terms) << ";\n";
  }
  for (const auto& a : p.alpha_rules) {
    out << "alpha " << argument(p.families[static_cast<std::size_t>(a.family)], 'm') << " = "
        << terms_text(p, a.terms) << ";\n";
  }
  return out.str();
}

}  // namespace homlie
