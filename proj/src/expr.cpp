#include "pgca/expr.hpp"

#include <algorithm>
#include <cctype>

namespace pgca {

ParseError::ParseError(size_t pos, const std::string& msg)
    : std::runtime_error("parse error at byte " + std::to_string(pos) + ": " + msg),
      pos(pos) {}

Alphabet alphabet_for(const ModuleSpec& spec) {
  Alphabet a;
  a.arity = 2;
  switch (spec.family) {
    case Family::TypeI: a.vars = {{"X", 0}, {"Y", 1}}; break;
    case Family::TypeII: a.vars = {{"S", 0}, {"T", 1}}; break;
    case Family::TypeIII: a.vars = {{"P", 0}, {"Q", 1}}; break;
    case Family::WittOmega:
    case Family::HVirOmega: a.vars = {{"Y", 1}}; break;
  }
  return a;
}

Alphabet alphabet_for(const TensorSpec& spec) {
  const Alphabet left = alphabet_for(spec.left);
  const Alphabet right = alphabet_for(spec.right);
  Alphabet a;
  a.arity = 4;
  a.vars = left.vars;
  for (const auto& [name, slot] : right.vars) {
    std::string n = name;
    for (const auto& [lname, lslot] : left.vars)
      if (lname == n) {
        n += "1";
        break;
      }
    a.vars.emplace_back(std::move(n), slot + 2);
  }
  return a;
}

Alphabet alphabet_for(const ModuleRef& mod) {
  return mod.is_tensor() ? alphabet_for(mod.tensor()) : alphabet_for(mod.single());
}

Vector ExprAST::lower() const {
  Vector v(arity);
  for (const ExprTerm& t : terms) v.add_term(t.mono, t.coeff);
  return v;
}

namespace {

enum class Side { All, Left, Right };

bool side_admits(Side side, int slot) {
  switch (side) {
    case Side::All: return true;
    case Side::Left: return slot < 2;
    case Side::Right: return slot >= 2;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view src, const Alphabet* alph) : s_(src), alph_(alph) {}

  ExprAST run_expr() {
    ExprAST ast;
    ast.arity = alph_->arity;
    skip_ws();
    if (done()) throw ParseError(pos_, "empty expression");
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    for (;;) {
      ExprTerm t = parse_term();
      if (neg) t.coeff = -t.coeff;
      ast.terms.push_back(std::move(t));
      skip_ws();
      if (done()) break;
      const char c = peek();
      if (c == '+') {
        neg = false;
      } else if (c == '-') {
        neg = true;
      } else if (c == '@') {
        throw ParseError(pos_, alph_->arity == 4
                                   ? "a term allows a single '@'"
                                   : "'@' is only valid in a tensor context");
      } else {
        throw ParseError(pos_, "expected '+' or '-' between terms");
      }
      ++pos_;
    }
    return ast;
  }

  Scalar run_scalar() {
    skip_ws();
    bool neg = false;
    if (!done() && peek() == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    if (done() || !is_digit(peek())) throw ParseError(pos_, "expected a number");
    const Scalar v = parse_coeff(neg);
    skip_ws();
    if (!done()) throw ParseError(pos_, "unexpected trailing characters");
    return v;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
  }

  ExprTerm parse_term() {
    ExprTerm t{Scalar(1), Monomial(alph_->arity)};
    parse_product(t, alph_->arity == 4 ? Side::Left : Side::All);
    if (alph_->arity == 4) {
      skip_ws();
      if (done() || peek() != '@') {
        // a bare coefficient (e.g. the zero vector's canonical form "0")
        // denotes a Scalar multiple of 1 (x) 1
        if (t.mono.is_unit()) return t;
        throw ParseError(pos_, "expected '@' between tensor factors");
      }
      ++pos_;
      parse_product(t, Side::Right);
    }
    return t;
  }

  void parse_product(ExprTerm& t, Side side) {
    for (;;) {
      parse_element(t, side);
      skip_ws();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
  }

  void parse_element(ExprTerm& t, Side side) {
    skip_ws();
    if (done()) throw ParseError(pos_, "expected a coefficient or variable");
    const char c = peek();
    if (is_digit(c)) {
      t.coeff *= parse_coeff(false);
      return;
    }
    if (is_alpha(c)) {
      const size_t start = pos_;
      const std::string name = parse_ident();
      int slot = -1;
      bool known = false;
      for (const auto& [n, s] : alph_->vars) {
        if (n == name) {
          known = true;
          if (side_admits(side, s)) slot = s;
        }
      }
      if (slot < 0)
        throw ParseError(start, known
                                    ? "variable '" + name + "' belongs to the other tensor factor"
                                    : "unknown variable '" + name + "' for this module");
      unsigned e = 1;
      skip_ws();
      if (!done() && peek() == '^') {
        ++pos_;
        e = parse_nat("exponent");
      }
      const unsigned long ne = static_cast<unsigned long>(t.mono.exp(slot)) + e;
      if (ne > 0xfffful) throw ParseError(start, "exponent too large");
      t.mono.set_exp(slot, static_cast<unsigned>(ne));
      return;
    }
    throw ParseError(pos_, "expected a coefficient or variable");
  }

  // rational ['i'] or rational ('+'|'-') rational 'i'; neg_first negates
  // the leading rational before any combination.  The Gaussian tail
  // binds only when written contiguously ("1/2+2/3i"); a spaced sign is
  // a term separator ("1 - 1i*..." starts a new term), which keeps the
  // grammar unambiguous against the expression-level sum.
  Scalar parse_coeff(bool neg_first) {
    Rational a = parse_rational();
    if (neg_first) a = -a;
    if (!done() && peek() == 'i') {
      ++pos_;
      return Scalar(Rational(0), std::move(a));
    }
    const size_t save = pos_;
    if (!done() && (peek() == '+' || peek() == '-')) {
      const bool minus = peek() == '-';
      ++pos_;
      if (!done() && is_digit(peek())) {
        Rational b = parse_rational();
        if (!done() && peek() == 'i') {
          ++pos_;
          return Scalar(std::move(a), minus ? Rational(-b) : std::move(b));
        }
      }
    }
    pos_ = save;
    return Scalar(std::move(a));
  }

  Rational parse_rational() {
    const mpz_class num = parse_digits("number");
    if (!done() && peek() == '/') {
      const size_t den_pos = ++pos_;
      const mpz_class den = parse_digits("denominator");
      if (den == 0) throw ParseError(den_pos, "zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  mpz_class parse_digits(const char* what) {
    const size_t start = pos_;
    while (!done() && is_digit(peek())) ++pos_;
    if (pos_ == start) throw ParseError(start, std::string("expected a ") + what);
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  unsigned parse_nat(const char* what) {
    skip_ws();
    const size_t start = pos_;
    const mpz_class n = parse_digits(what);
    if (n > 0xffff) throw ParseError(start, std::string(what) + " too large");
    return static_cast<unsigned>(n.get_ui());
  }

  std::string parse_ident() {
    const size_t start = pos_;
    ++pos_;
    while (!done() && is_alnum(peek())) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  const Alphabet* alph_;
  size_t pos_ = 0;
};

bool display_negative(const Scalar& c) {
  if (sgn(c.re()) != 0) return sgn(c.re()) < 0;
  return sgn(c.im()) < 0;
}

std::string word_for(const Monomial& m, const Alphabet& alph, int lo, int hi) {
  std::string w;
  for (const auto& [name, slot] : alph.vars) {
    if (slot < lo || slot >= hi) continue;
    const unsigned e = m.exp(slot);
    if (e == 0) continue;
    if (!w.empty()) w += "*";
    w += name;
    if (e > 1) w += "^" + std::to_string(e);
  }
  return w.empty() ? "1" : w;
}

std::string format_term(const Scalar& c, const Monomial& m, const Alphabet& alph) {
  const std::string word = alph.arity == 4
                               ? word_for(m, alph, 0, 2) + " @ " + word_for(m, alph, 2, 4)
                               : word_for(m, alph, 0, 4);
  if (c == Scalar(1)) return word;
  // rank-one constant terms read like polynomials: "1/2", not "1/2*1"
  if (alph.arity != 4 && word == "1") return c.str();
  return c.str() + "*" + word;
}

}  // namespace

ExprAST parse_expr(std::string_view src, const Alphabet& alph) {
  return Parser(src, &alph).run_expr();
}

Vector parse_vector(std::string_view src, const Alphabet& alph) {
  return parse_expr(src, alph).lower();
}

Scalar parse_scalar(std::string_view src) {
  static const Alphabet none{2, {}};
  return Parser(src, &none).run_scalar();
}

Poly parse_poly(std::string_view src, const std::string& var) {
  Alphabet a;
  a.arity = 2;
  a.vars = {{var, 0}};
  const Vector v = parse_vector(src, a);
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : v.terms()) {
    const size_t d = m.exp(0);
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] = c;
  }
  return Poly(std::move(coeffs));
}

std::string format_vector(const Vector& v, const Alphabet& alph) {
  if (v.is_zero()) return "0";
  std::vector<const Vector::Term*> ts;
  ts.reserve(v.term_count());
  for (const auto& t : v.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const Vector::Term* a, const Vector::Term* b) {
    return Monomial::graded_cmp(a->first, b->first) > 0;
  });
  std::string out;
  bool first = true;
  for (const Vector::Term* t : ts) {
    Scalar c = t->second;
    const bool neg = display_negative(c);
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += format_term(c, t->first, alph);
    first = false;
  }
  return out;
}

std::string format_poly(const Poly& p, const std::string& var) {
  Alphabet a;
  a.arity = 2;
  a.vars = {{var, 0}};
  Vector v(2);
  for (int d = 0; d <= p.degree(); ++d)
    v.add_term(Monomial(2, {static_cast<unsigned>(d), 0u}), p.coeff(static_cast<size_t>(d)));
  return format_vector(v, a);
}

}  // namespace pgca
