#include <cctype>

#include "nsag/errors.hpp"
#include "nsag/polyring.hpp"

namespace nsag {

namespace {

constexpr unsigned long kMaxPower = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExtPoly parse_all() {
    ExtPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() { return at_end() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (at_end()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational() {
    Integer num = digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      Integer den = digits();
      if (sgn(den) == 0) {
        pos_ = at;
        fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  ExtPoly expr() {
    ExtPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ExtPoly term() {
    ExtPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  ExtPoly factor() {
    if (accept('-')) return -factor();
    bool is_eps = false;
    ExtPoly b = base(is_eps);
    if (!accept('^')) return b;
    if (accept('(')) {
      const bool negative = accept('-');
      const std::size_t at = pos_;
      Rational q = rational();
      if (negative) q = -q;
      expect(')');
      if (is_eps) return ExtPoly::constant(LCNumber::epsilon(q));
      if (sgn(q) < 0 || q.get_den() != 1) {
        pos_ = at;
        fail("rational exponents are only allowed on eps");
      }
      return power(b, q.get_num(), at);
    }
    const std::size_t at = pos_;
    Integer e = digits();
    if (is_eps) return ExtPoly::constant(LCNumber::epsilon(Rational(e)));
    return power(b, e, at);
  }

  ExtPoly power(const ExtPoly& b, const Integer& e, std::size_t at) {
    if (e > kMaxPower) {
      pos_ = at;
      fail("exponent too large");
    }
    return pow(b, static_cast<unsigned>(e.get_ui()));
  }

  ExtPoly base(bool& is_eps) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (is_digit(c)) return ExtPoly::constant(LCNumber(GaussianRational(rational())));
    if (c == '(') {
      ++pos_;
      ExtPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "i" && !(pos_ < text_.size() && is_word(text_[pos_]))) {
        return ExtPoly::constant(LCNumber(GaussianRational::imaginary_unit()));
      }
      if (word == "eps" && !(pos_ < text_.size() && is_word(text_[pos_]))) {
        is_eps = true;
        return ExtPoly::constant(LCNumber::epsilon(Rational(1)));
      }
      if ((word == "z" || word == "w") && pos_ < text_.size() && is_digit(text_[pos_])) {
        const std::size_t at = pos_;
        Integer idx = digits();
        if (pos_ < text_.size() && is_word(text_[pos_])) fail("malformed variable name");
        if (idx >= kWOffset) {
          pos_ = at;
          fail("variable index too large");
        }
        const auto k = static_cast<std::uint32_t>(idx.get_ui());
        return ExtPoly::variable(word == "z" ? z(k) : w(k));
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Piece {
  bool negative;
  std::string body;
};

std::string eps_power(const Rational& q) {
  if (sgn(q) == 0) return "";
  if (q == 1) return "eps";
  if (q.get_den() == 1 && sgn(q) > 0) return "eps^" + to_string(q);
  return "eps^(" + to_string(q) + ")";
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

void append_term(std::vector<Piece>& pieces, const LCNumber& c, const Monomial& m) {
  struct Atom {
    Rational value;
    bool imaginary;
    Rational exponent;
  };
  std::vector<Atom> atoms;
  for (const auto& t : c.terms()) {
    if (sgn(t.coeff.re()) != 0) atoms.push_back({t.coeff.re(), false, t.exponent});
    if (sgn(t.coeff.im()) != 0) atoms.push_back({t.coeff.im(), true, t.exponent});
  }
  const std::string mono = m.is_one() ? "" : to_string(m);
  if (atoms.size() == 1 || m.is_one()) {
    for (const auto& a : atoms) {
      const Rational mag = abs(a.value);
      const std::string eps = eps_power(a.exponent);
      const bool bare = mag == 1 && (a.imaginary || !eps.empty() || !mono.empty());
      pieces.push_back({sgn(a.value) < 0, join({bare ? "" : to_string(mag), a.imaginary ? "i" : "", eps, mono})});
    }
    return;
  }
  pieces.push_back({false, "(" + to_string(c) + ")*" + mono});
}

std::string render(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k == 0) {
      if (pieces[k].negative) out += "-";
    } else {
      out += pieces[k].negative ? " - " : " + ";
    }
    out += pieces[k].body;
  }
  return out;
}

}  // namespace

ExtPoly parse_poly(std::string_view text) { return Parser(text).parse_all(); }

LCNumber parse_number(std::string_view text) {
  ExtPoly p = parse_poly(text);
  if (!p.is_constant()) throw ParseError(0, "expected a number, found a polynomial");
  return p.constant_term();
}

std::vector<ExtPoly> parse_poly_list(std::string_view text) {
  std::vector<ExtPoly> out;
  std::size_t start = 0;
  bool only_space = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) only_space = false;
  }
  if (only_space) return out;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == ',' || text[k] == ';') {
      try {
        out.push_back(parse_poly(text.substr(start, k - start)));
      } catch (const ParseError& e) {
        throw ParseError(start + e.position(), "malformed list entry");
      }
      start = k + 1;
    }
  }
  return out;
}

std::string format_poly(const ExtPoly& f) {
  std::vector<Piece> pieces;
  for (const auto& [m, c] : f.sorted_terms(MonomialOrder::grevlex())) append_term(pieces, c, m);
  return render(pieces);
}

std::string format_poly(const StdPoly& f) { return format_poly(extend(f)); }

std::string format_number(const LCNumber& x) { return to_string(x); }

std::string format_number(const GaussianRational& x) { return to_string(x); }

PointAssignment parse_point(std::string_view text) {
  PointAssignment p;
  std::size_t start = 0;
  bool only_space = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) only_space = false;
  }
  if (only_space) return p;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k != text.size() && text[k] != ',' && text[k] != ';') continue;
    const std::string_view entry = text.substr(start, k - start);
    const std::size_t eq = entry.find('=');
    if (eq == std::string_view::npos) throw ParseError(start, "expected var=value");
    ExtPoly var;
    try {
      var = parse_poly(entry.substr(0, eq));
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "malformed variable");
    }
    if (var.size() != 1 || var.terms()[0].first.degree() != 1 || !(var.terms()[0].second == LCNumber(1))) {
      throw ParseError(start, "left side of '=' must be a variable");
    }
    const Var v = var.terms()[0].first.entries()[0].first;
    try {
      p.set(v, parse_number(entry.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(start + eq + 1 + e.position(), "malformed value");
    }
    start = k + 1;
  }
  return p;
}

std::string format_point(const PointAssignment& p) {
  std::string out;
  for (const auto& [v, x] : p.values()) {
    if (!out.empty()) out += ", ";
    out += var_name(v) + "=" + to_string(x);
  }
  return out;
}

}  // namespace nsag
