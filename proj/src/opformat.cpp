#include "coulomb/opformat.hpp"

#include <cctype>
#include <stdexcept>

namespace coulomb {

namespace {

struct Token {
  enum Kind { kNumber, kName, kOp, kEnd } kind = kEnd;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      tok_ = {Token::kEnd, ""};
      return;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok_ = {Token::kNumber, std::string(s_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      // Bracketed index suffix belongs to the name: w[1,2], u[1,1].
      if (pos_ < s_.size() && s_[pos_] == '[') {
        while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
        if (pos_ >= s_.size()) throw std::invalid_argument("unterminated bracket in name");
        ++pos_;
      }
      tok_ = {Token::kName, std::string(s_.substr(start, pos_ - start))};
      return;
    }
    ++pos_;
    tok_ = {Token::kOp, std::string(1, c)};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Token tok_;
};

// Parser producing ShiftOperator values over a fixed algebra; with no
// algebra it produces commutative polynomials only.
class Parser {
 public:
  Parser(const ShiftAlgebra* alg, std::string_view text) : alg_(alg), lex_(text) {}

  ShiftOperator parse() {
    ShiftOperator v = expr();
    if (lex_.peek().kind != Token::kEnd)
      throw std::invalid_argument("trailing input near '" + lex_.peek().text + "'");
    return v;
  }

 private:
  const ShiftAlgebra& alg() const {
    if (!alg_) throw std::invalid_argument("operator syntax needs an algebra");
    return *alg_;
  }

  ShiftOperator expr() {
    bool neg = false;
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "-" || lex_.peek().text == "+")) {
      if (lex_.take().text == "-") neg = !neg;
    }
    ShiftOperator v = term();
    if (neg) v = -v;
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool minus = lex_.take().text == "-";
      ShiftOperator rhs = term();
      v = minus ? v - rhs : v + rhs;
    }
    return v;
  }

  ShiftOperator term() {
    ShiftOperator v = factor();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::kOp && t.text == "*") {
        lex_.take();
        v = v * factor();
      } else if (t.kind == Token::kOp && t.text == "/") {
        lex_.take();
        // The divisor's exponent is consumed here, unevaluated, so that
        // "x/(a)^2" divides twice instead of atomizing a squared form.
        ShiftOperator base = primary();
        long e = 1;
        if (lex_.peek().kind == Token::kOp && lex_.peek().text == "^") {
          lex_.take();
          e = integer();
        }
        if (e >= 0)
          v = divide_by(v, base, e);
        else
          for (long k = 0; k < -e; ++k) v = v * base;
      } else if (t.kind == Token::kName || (t.kind == Token::kOp && t.text == "(")) {
        v = v * factor();  // juxtaposition: "coef u[1,1] u[2,1]^2"
      } else {
        break;
      }
    }
    return v;
  }

  ShiftOperator factor() {
    if (lex_.peek().kind == Token::kOp && lex_.peek().text == "-") {
      lex_.take();
      return -factor();
    }
    ShiftOperator base = primary();
    if (lex_.peek().kind == Token::kOp && lex_.peek().text == "^") {
      lex_.take();
      long e = integer();
      // A pure shift monomial is invertible: scale its exponent vector.
      if (auto n = pure_shift(base)) {
        ShiftVector scaled = *n;
        for (auto& x : scaled) x = static_cast<int>(x * e);
        return ShiftOperator::term(alg(), scaled,
                                   RestrictedFraction(Poly::constant(1), alg().hbar()));
      }
      if (e >= 0) {
        ShiftOperator v = one();
        for (long k = 0; k < e; ++k) v = v * base;
        return v;
      }
      return divide_by(one(), base, -e);
    }
    return base;
  }

  static std::optional<ShiftVector> pure_shift(const ShiftOperator& op) {
    if (op.terms().size() != 1) return std::nullopt;
    const auto& [n, f] = *op.terms().begin();
    if (!f.is_polynomial() || !(f.numerator() == Poly::constant(1))) return std::nullopt;
    bool nontrivial = false;
    for (int x : n) nontrivial = nontrivial || x != 0;
    if (!nontrivial) return std::nullopt;
    return n;
  }

  long integer() {
    bool neg = false;
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "-" || lex_.peek().text == "+"))
      neg ^= lex_.take().text == "-";
    Token t = lex_.take();
    if (t.kind != Token::kNumber) throw std::invalid_argument("expected integer exponent");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  ShiftOperator one() { return ShiftOperator::one(alg()); }

  ShiftOperator primary() {
    Token t = lex_.take();
    if (t.kind == Token::kNumber) {
      Rational r(t.text);
      return ShiftOperator::coefficient(alg(), Poly::constant(r));
    }
    if (t.kind == Token::kName) return name_value(t.text);
    if (t.kind == Token::kOp && t.text == "(") {
      ShiftOperator v = expr();
      Token close = lex_.take();
      if (close.kind != Token::kOp || close.text != ")")
        throw std::invalid_argument("expected ')'");
      return v;
    }
    throw std::invalid_argument("unexpected token '" + t.text + "'");
  }

  ShiftOperator name_value(const std::string& name) {
    if (name.size() > 1 && name[0] == 'u' && name[1] == '[') {
      auto [vertex, r] = parse_slot(name.substr(1));
      return ShiftOperator::shift(alg(), vertex, r);
    }
    auto id = vars::lookup(name);
    if (!id) throw std::invalid_argument("unknown variable '" + name + "'");
    return ShiftOperator::variable(alg(), *id);
  }

  std::pair<int, int> parse_slot(const std::string& bracketed) const {
    // "[i,r]" with i a vertex id string.
    auto comma = bracketed.find(',');
    if (bracketed.front() != '[' || bracketed.back() != ']' || comma == std::string::npos)
      throw std::invalid_argument("malformed slot " + bracketed);
    std::string vid = bracketed.substr(1, comma - 1);
    int r = std::stoi(bracketed.substr(comma + 1, bracketed.size() - comma - 2));
    auto vertex = alg().quiver().vertex_by_id(vid);
    if (!vertex) throw std::invalid_argument("unknown vertex id " + vid);
    return {*vertex, r};
  }

  // x / y^count for divisor y that is a scalar, hbar-multiple, an
  // admissible linear form, or an invertible shift monomial.
  ShiftOperator divide_by(const ShiftOperator& x, const ShiftOperator& y, long count) {
    if (auto n = pure_shift(y)) {
      ShiftVector inverse = *n;
      for (auto& e : inverse) e = static_cast<int>(-e * count);
      return x * ShiftOperator::term(alg(), inverse,
                                     RestrictedFraction(Poly::constant(1), alg().hbar()));
    }
    if (y.terms().size() != 1) throw std::invalid_argument("divisor must be a single term");
    const auto& [n, f] = *y.terms().begin();
    for (int e : n)
      if (e != 0) throw std::invalid_argument("cannot divide by a shift monomial");
    if (!f.is_polynomial()) throw std::invalid_argument("divisor must be polynomial");
    const Poly& p = f.numerator();
    ShiftOperator r = x;
    if (p.is_constant()) {
      Rational inv = 1 / p.constant_term();
      for (long k = 0; k < count; ++k) r = r * inv;
      return r;
    }
    auto [atom, scale] = atomize(p);
    for (long k = 0; k < count; ++k) {
      ShiftOperator next(alg());
      for (const auto& [sv, fr] : r.terms()) {
        RestrictedFraction g = fr * (1 / scale);
        next += ShiftOperator::term(alg(), sv, g.divided_by(atom));
      }
      r = next;
    }
    return r;
  }

  // p = scale * (hi - lo + c*hbar) or scale * hbar.
  std::pair<Atom, Rational> atomize(const Poly& p) const {
    VarId hb = alg().hbar();
    Rational c_h(0);
    std::map<VarId, Rational> linear;
    for (const auto& [m, c] : p.terms()) {
      if (m.total_degree() != 1) throw std::invalid_argument("divisor is not linear");
      VarId v = m.entries()[0].first;
      if (v == hb)
        c_h = c;
      else
        linear[v] = c;
    }
    if (linear.empty()) {
      if (c_h == 0) throw std::invalid_argument("zero divisor");
      return {Atom::hbar(), c_h};
    }
    if (linear.size() != 2) throw std::invalid_argument("divisor must have two variables");
    auto it = linear.begin();
    auto [va, ca] = *it++;
    auto [vb, cb] = *it;
    if (ca != -cb) throw std::invalid_argument("divisor is not a difference form");
    // va < vb by map order; sign chosen so the atom reads va - vb + (.)hbar.
    return {Atom::linear(va, vb, c_h / ca), ca};
  }

  const ShiftAlgebra* alg_;
  Lexer lex_;
};

// Plain commutative polynomial parser sharing the lexer; interns names.
class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : lex_(text) {}

  Poly parse() {
    Poly v = expr();
    if (lex_.peek().kind != Token::kEnd)
      throw std::invalid_argument("trailing input near '" + lex_.peek().text + "'");
    return v;
  }

 private:
  Poly expr() {
    bool neg = false;
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "-" || lex_.peek().text == "+"))
      neg ^= lex_.take().text == "-";
    Poly v = term();
    if (neg) v = -v;
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      bool minus = lex_.take().text == "-";
      Poly rhs = term();
      v = minus ? v - rhs : v + rhs;
    }
    return v;
  }

  Poly term() {
    Poly v = factor();
    while (lex_.peek().kind == Token::kOp &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      bool divide = lex_.take().text == "/";
      Poly rhs = factor();
      if (divide) {
        if (!rhs.is_constant() || rhs.is_zero())
          throw std::invalid_argument("polynomial division only by nonzero scalars");
        v = v * (1 / rhs.constant_term());
      } else {
        v = v * rhs;
      }
    }
    return v;
  }

  Poly factor() {
    if (lex_.peek().kind == Token::kOp && lex_.peek().text == "-") {
      lex_.take();
      return -factor();
    }
    Poly base = primary();
    if (lex_.peek().kind == Token::kOp && lex_.peek().text == "^") {
      lex_.take();
      Token t = lex_.take();
      if (t.kind != Token::kNumber) throw std::invalid_argument("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  Poly primary() {
    Token t = lex_.take();
    if (t.kind == Token::kNumber) return Poly::constant(Rational(t.text));
    if (t.kind == Token::kName) return Poly::var(vars::intern(t.text));
    if (t.kind == Token::kOp && t.text == "(") {
      Poly v = expr();
      Token close = lex_.take();
      if (close.kind != Token::kOp || close.text != ")")
        throw std::invalid_argument("expected ')'");
      return v;
    }
    throw std::invalid_argument("unexpected token '" + t.text + "'");
  }

  Lexer lex_;
};

}  // namespace

ShiftOperator parse_operator(const ShiftAlgebra& alg, std::string_view text) {
  return Parser(&alg, text).parse();
}

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace coulomb
