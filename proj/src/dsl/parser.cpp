#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "homlie/dsl.hpp"

namespace homlie {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), l, cl});
      advance(j - i);
    } else if (std::string(";,[](){}=+-*/^").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, cl});
      advance(1);
    } else {
      throw SyntaxError(l, cl, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_reserved(const std::string& id) {
  static const std::vector<std::string> words{"q",      "m",      "n",     "qbr",   "qnm",     "algebra", "mode",
                                              "family", "parity", "degrees", "bracket", "alpha", "shift"};
  return std::find(words.begin(), words.end(), id) != words.end();
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  AlgebraPresentation document() {
    AlgebraPresentation p;
    bool have_name = false, have_mode = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident) fail(t, "expected a declaration");
      if (t.text == "algebra") {
        next();
        if (have_name) fail(t, "algebra name declared twice");
        p.name = ident("algebra name");
        have_name = true;
      } else if (t.text == "mode") {
        next();
        const Token& m = peek();
        const std::string v = ident("mode");
        if (v == "lie") {
          p.mode = SymmetryMode::Lie;
        } else if (v == "super") {
          p.mode = SymmetryMode::Super;
        } else {
          fail(m, "mode must be 'lie' or 'super'");
        }
        have_mode = true;
      } else if (t.text == "family") {
        next();
        p.families.push_back(family());
      } else if (t.text == "bracket") {
        next();
        p.bracket_rules.push_back(bracket(p));
      } else if (t.text == "alpha") {
        next();
        p.alpha_rules.push_back(alpha(p));
      } else {
        fail(t, "unknown declaration '" + t.text + "'");
      }
      expect(";");
    }
    if (!have_name) fail(peek(), "missing 'algebra <name>;' declaration");
    if (!have_mode) fail(peek(), "missing 'mode lie|super;' declaration");
    p.validate();
    return p;
  }

  MapSpec map_document(const AlgebraPresentation& p) {
    MapSpec m;
    bool have_kind = false;
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident) fail(t, "expected a declaration");
      next();
      if (t.text == "parity") {
        const Token& par = peek();
        const long v = integer(false);
        if (v != 0 && v != 1) fail(par, "parity must be 0 or 1");
        m.parity = static_cast<int>(v);
      } else if (t.text == "degree") {
        m.degree = static_cast<int>(integer(true));
      } else if (t.text == "phi") {
        if (have_kind && m.kind != MapSpec::Kind::Bilinear) fail(t, "phi and f rules cannot be mixed");
        m.kind = MapSpec::Kind::Bilinear;
        have_kind = true;
        m.bilinear.push_back(bracket(p));
      } else if (t.text == "f") {
        if (have_kind && m.kind != MapSpec::Kind::Linear) fail(t, "phi and f rules cannot be mixed");
        m.kind = MapSpec::Kind::Linear;
        have_kind = true;
        m.linear.push_back(alpha(p));
      } else {
        fail(t, "unknown declaration '" + t.text + "'");
      }
      expect(";");
    }
    if (!have_kind) fail(peek(), "a map needs at least one 'phi' or 'f' rule");
    return m;
  }

  CoeffExpr standalone_expr() {
    CoeffExpr e = expr(nullptr);
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "' after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw SyntaxError(t.line, t.column, msg); }

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool accept(const std::string& punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) fail(peek(), "expected '" + punct + "'" + (peek().kind == Tok::End ? std::string(" at end of input") : ", found '" + peek().text + "'"));
  }
  std::string ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(peek(), "expected " + what);
    return next().text;
  }
  bool accept_word(const std::string& word) {
    if (peek().kind == Tok::Ident && peek().text == word) {
      next();
      return true;
    }
    return false;
  }
  void expect_word(const std::string& word) {
    if (!accept_word(word)) fail(peek(), "expected '" + word + "'");
  }
  long integer(bool allow_sign) {
    bool neg = false;
    if (allow_sign && accept("-")) neg = true;
    if (peek().kind != Tok::Int) fail(peek(), "expected an integer");
    const Token& t = next();
    try {
      const long v = std::stol(t.text);
      return neg ? -v : v;
    } catch (const std::exception&) {
      fail(t, "integer out of range");
    }
  }

  Family family() {
    Family f;
    const Token& name_tok = peek();
    f.name = ident("family name");
    if (is_reserved(f.name)) fail(name_tok, "'" + f.name + "' is reserved and cannot name a family");
    expect_word("parity");
    const Token& par = peek();
    const long parity = integer(false);
    if (parity != 0 && parity != 1) fail(par, "parity must be 0 or 1");
    f.parity = static_cast<int>(parity);
    expect_word("degrees");
    if (accept_word("int")) {
      f.domain = Family::Domain::AllIntegers;
    } else if (accept_word("none")) {
      f.domain = Family::Domain::Ungraded;
    } else if (accept("{")) {
      f.domain = Family::Domain::Finite;
      do {
        f.degrees.push_back(static_cast<int>(integer(true)));
      } while (accept(","));
      expect("}");
      std::sort(f.degrees.begin(), f.degrees.end());
      f.degrees.erase(std::unique(f.degrees.begin(), f.degrees.end()), f.degrees.end());
    } else {
      fail(peek(), "expected 'int', 'none' or '{...}' after degrees");
    }
    return f;
  }

  int family_ref(const AlgebraPresentation& p) {
    const Token& t = peek();
    const std::string id = ident("family name");
    auto idx = p.find_family(id);
    if (!idx) fail(t, "unknown family '" + id + "'");
    return *idx;
  }

  // Optional "(m)" or "(n)" binding after a family name; returns 'm', 'n' or 0.
  char binding(const AlgebraPresentation& p, int family) {
    const bool ungraded = p.families[static_cast<std::size_t>(family)].domain == Family::Domain::Ungraded;
    if (ungraded) return 0;
    expect("(");
    const Token& t = peek();
    const std::string v = ident("degree variable");
    if (v != "m" && v != "n") fail(t, "degree variable must be m or n");
    expect(")");
    return v[0];
  }

  BracketRule bracket(const AlgebraPresentation& p) {
    BracketRule r;
    expect("[");
    r.left = family_ref(p);
    const char lv = binding(p, r.left);
    expect(",");
    r.right = family_ref(p);
    const Token& rt = peek();
    const char rv = binding(p, r.right);
    expect("]");
    if (lv != 0 || rv != 0) {
      if (lv == rv) fail(rt, "the two arguments must use distinct variables m and n");
      r.left_var_is_m = lv == 'm';
    }
    if (accept_word("shift")) r.shift = static_cast<int>(integer(true));
    expect("=");
    r.terms = sum(p);
    return r;
  }

  AlphaRule alpha(const AlgebraPresentation& p) {
    AlphaRule a;
    a.family = family_ref(p);
    const Token& t = peek();
    const char v = binding(p, a.family);
    if (v == 'n') fail(t, "alpha rules are written in the variable m");
    expect("=");
    a.terms = sum(p);
    return a;
  }

  bool at_family(const AlgebraPresentation* p) const {
    return p && peek().kind == Tok::Ident && p->find_family(peek().text).has_value();
  }

  // summand (('+'|'-') summand)*, each summand being [coeff '*'] Target(affine).
  std::vector<RuleTerm> sum(const AlgebraPresentation& p) {
    std::vector<RuleTerm> terms;
    bool negate = false;
    for (;;) {
      RuleTerm term = summand(p);
      if (negate) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      if (accept("+")) {
        negate = false;
      } else if (accept("-")) {
        negate = true;
      } else {
        break;
      }
    }
    return terms;
  }

  RuleTerm summand(const AlgebraPresentation& p) {
    std::optional<CoeffExpr> coeff;
    bool divide = false;
    if (peek().kind == Tok::Punct && peek().text == "-" && peek(1).kind == Tok::Ident &&
        p.find_family(peek(1).text)) {
      next();
      coeff = -CoeffExpr::integer(1);
    }
    for (;;) {
      if (at_family(&p)) {
        RuleTerm t;
        t.target = family_ref(p);
        if (p.families[static_cast<std::size_t>(t.target)].domain != Family::Domain::Ungraded) {
          expect("(");
          t.degree = affine();
          expect(")");
        }
        t.coeff = coeff ? *coeff : CoeffExpr::integer(1);
        return t;
      }
      CoeffExpr f = unary(&p);
      coeff = !coeff ? f : divide ? *coeff / f : *coeff * f;
      if (accept("*")) {
        divide = false;
      } else if (accept("/")) {
        divide = true;
      } else {
        fail(peek(), "expected '* Family(...)' after coefficient");
      }
    }
  }

  CoeffExpr expr(const AlgebraPresentation* p) {
    CoeffExpr e = term(p);
    for (;;) {
      if (accept("+")) {
        e = e + term(p);
      } else if (accept("-")) {
        e = e - term(p);
      } else {
        return e;
      }
    }
  }

  CoeffExpr term(const AlgebraPresentation* p) {
    CoeffExpr e = unary(p);
    for (;;) {
      if (accept("*")) {
        e = e * unary(p);
      } else if (accept("/")) {
        e = e / unary(p);
      } else {
        return e;
      }
    }
  }

  CoeffExpr unary(const AlgebraPresentation* p) {
    if (accept("-")) return -unary(p);
    return power(p);
  }

  CoeffExpr power(const AlgebraPresentation* p) {
    CoeffExpr base = atom(p);
    if (accept("^")) return CoeffExpr::pow(base, exponent());
    return base;
  }

  Affine exponent() {
    if (accept("(")) {
      Affine a = affine();
      expect(")");
      return a;
    }
    const bool neg = accept("-");
    Affine a;
    if (peek().kind == Tok::Int) {
      a.c = integer(false);
    } else {
      const Token& t = peek();
      const std::string v = ident("exponent");
      if (v == "m") {
        a.m = 1;
      } else if (v == "n") {
        a.n = 1;
      } else {
        fail(t, "exponent must be an integer, m, n or a parenthesized affine expression");
      }
    }
    return neg ? -a : a;
  }

  CoeffExpr atom(const AlgebraPresentation* p) {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      next();
      return CoeffExpr::integer(Integer(t.text));
    }
    if (accept("(")) {
      CoeffExpr e = expr(p);
      expect(")");
      return e;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "q") {
        next();
        return CoeffExpr::q();
      }
      if (t.text == "m") {
        next();
        return CoeffExpr::var_m();
      }
      if (t.text == "n") {
        next();
        return CoeffExpr::var_n();
      }
      if (t.text == "qbr" || t.text == "qnm") {
        next();
        expect("(");
        Affine a = affine();
        expect(")");
        return t.text == "qbr" ? CoeffExpr::qbr(a) : CoeffExpr::qnm(a);
      }
      fail(t, "unexpected identifier '" + t.text + "'");
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  // Integer affine expression in m and n, e.g. "m + n + 1", "2*m - n".
  Affine affine() {
    Affine acc;
    bool neg = accept("-");
    for (;;) {
      Affine t = affine_term();
      acc = neg ? acc - t : acc + t;
      if (accept("+")) {
        neg = false;
      } else if (accept("-")) {
        neg = true;
      } else {
        return acc;
      }
    }
  }

  Affine affine_term() {
    Affine a;
    if (peek().kind == Tok::Int) {
      const long k = integer(false);
      if (accept("*")) {
        const Affine v = affine_var();
        return v.scaled(k);
      }
      a.c = k;
      return a;
    }
    return affine_var();
  }

  Affine affine_var() {
    const Token& t = peek();
    const std::string v = ident("m or n");
    if (v == "m") return {0, 1, 0};
    if (v == "n") return {0, 0, 1};
    fail(t, "affine expressions may only use m, n and integers");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPresentation parse_presentation(const std::string& text) { return Parser(text).document(); }

AlgebraPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read presentation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

AlgebraPresentation resolve_algebra(const std::string& name_or_path) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return builtin(name_or_path);
  if (name_or_path.size() > 4 && name_or_path.substr(name_or_path.size() - 4) == ".alg")
    return load_presentation(name_or_path);
  throw UnknownBuiltin(name_or_path);
}

MapSpec parse_map(const AlgebraPresentation& p, const std::string& text) { return Parser(text).map_document(p); }

MapSpec load_map(const AlgebraPresentation& p, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read map file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_map(p, buf.str());
}

CoeffExpr parse_coeff_expr(const std::string& text) { return Parser(text).standalone_expr(); }

QRational parse_qrational(const std::string& text) {
  CoeffExpr e = parse_coeff_expr(text);
  if (e.uses_degree_vars()) throw SyntaxError(1, 1, "a field element cannot mention m or n");
  return e.evaluate(0, 0);
}

}  // namespace homlie
