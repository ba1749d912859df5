#include "frobcheck/parse.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace frobcheck {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, SourceOffset where) : text_(text), where_(where) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t mark() {
    skip_space();
    return pos_;
  }
  std::string_view rest() const { return text_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

  [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& what) {
    std::size_t line = where_.line;
    std::size_t col = where_.column;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

 private:
  std::string_view text_;
  SourceOffset where_;
  std::size_t pos_ = 0;
};

class PolyParser {
 public:
  PolyParser(const Ring& ring, Cursor& cur) : ring_(ring), cur_(cur) {}

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (cur_.accept('-')) {
      negate = true;
    } else {
      cur_.accept('+');
    }
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    for (;;) {
      if (cur_.accept('+')) {
        acc += term();
      } else if (cur_.accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

 private:
  bool starts_factor() {
    char c = cur_.peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc = checked_mul(acc, factor());
      } else if (starts_factor()) {
        acc = checked_mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial checked_mul(const Polynomial& a, const Polynomial& b) {
    std::size_t at = cur_.mark();
    try {
      return a * b;
    } catch (const ExponentOverflow&) {
      cur_.fail_at(at, "exponent overflow");
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (cur_.accept('^')) {
      std::size_t at = cur_.mark();
      std::string d = cur_.digits();
      if (d.empty()) cur_.fail("expected exponent");
      std::uint64_t e = 0;
      for (char c : d) {
        e = e * 10 + static_cast<std::uint64_t>(c - '0');
        if (e > std::numeric_limits<Exponent>::max()) cur_.fail_at(at, "exponent overflow");
      }
      try {
        base = base.pow(e);
      } catch (const ExponentOverflow&) {
        cur_.fail_at(at, "exponent overflow");
      }
    }
    return base;
  }

  Polynomial atom() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.expect('(');
      Polynomial inner = expr();
      cur_.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string d = cur_.digits();
      const PrimeField& field = ring_.field();
      Coeff v = 0;
      for (char ch : d) v = field.add(field.mul(v, 10 % field.modulus()), field.reduce(static_cast<unsigned>(ch - '0')));
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t at = cur_.mark();
      std::string name = cur_.identifier();
      auto idx = ring_.find(name);
      if (!idx) cur_.fail_at(at, "unknown variable " + name);
      return Polynomial::variable(ring_, *idx);
    }
    if (c == '\0') cur_.fail("unexpected end of input");
    cur_.fail(std::string("unexpected character '") + c + "'");
  }

  const Ring& ring_;
  Cursor& cur_;
};

}  // namespace

Polynomial parse_poly(const Ring& ring, std::string_view text, SourceOffset where) {
  Cursor cur(text, where);
  PolyParser parser(ring, cur);
  Polynomial p = parser.expr();
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return p;
}

std::vector<Polynomial> parse_poly_list(const Ring& ring, std::string_view text, SourceOffset where) {
  Cursor cur(text, where);
  std::vector<Polynomial> out;
  // A single outer pair of parentheses wraps the list only when it spans the
  // whole text; "(x+y)*z" is a single polynomial.
  bool wrapped = false;
  {
    std::size_t depth = 0;
    std::string_view t = text;
    std::size_t first = t.find_first_not_of(" \t\r\n");
    std::size_t last = t.find_last_not_of(" \t\r\n");
    if (first != std::string_view::npos && t[first] == '(' && t[last] == ')') {
      wrapped = true;
      for (std::size_t i = first; i <= last; ++i) {
        if (t[i] == '(') ++depth;
        if (t[i] == ')') --depth;
        if (depth == 0 && i != last) {
          wrapped = false;
          break;
        }
      }
    }
  }
  if (wrapped) cur.expect('(');
  if (wrapped && cur.accept(')')) {
    if (!cur.at_end()) cur.fail("unexpected text after ideal");
    return out;
  }
  PolyParser parser(ring, cur);
  out.push_back(parser.expr());
  while (cur.accept(',')) out.push_back(parser.expr());
  if (wrapped) cur.expect(')');
  if (!cur.at_end()) cur.fail(std::string("unexpected character '") + cur.peek() + "'");
  return out;
}

Ring parse_ring(std::string_view text, SourceOffset where) {
  Cursor cur(text, where);
  std::size_t at = cur.mark();
  if (!cur.accept('F')) cur.fail("expected ring like F5[x,y]");
  cur.accept('_');
  std::string d = cur.digits();
  if (d.empty() || d.size() > 12) cur.fail("expected characteristic");
  std::uint64_t p = std::stoull(d);
  cur.expect('[');
  std::vector<std::string> vars;
  do {
    std::size_t vat = cur.mark();
    std::string v = cur.identifier();
    if (v.empty() || std::isdigit(static_cast<unsigned char>(v[0]))) cur.fail_at(vat, "expected variable name");
    vars.push_back(v);
  } while (cur.accept(','));
  cur.expect(']');
  OrderKind kind = OrderKind::GrevLex;
  if (!cur.at_end()) {
    std::size_t oat = cur.mark();
    std::string tag = cur.identifier();
    if (tag == "lex") {
      kind = OrderKind::Lex;
    } else if (tag == "grevlex") {
      kind = OrderKind::GrevLex;
    } else {
      cur.fail_at(oat, "unknown monomial order '" + tag + "'");
    }
    if (!cur.at_end()) cur.fail("unexpected text after ring");
  }
  try {
    return make_ring(p, std::move(vars), kind);
  } catch (const InvalidArgument& e) {
    cur.fail_at(at, e.what());
  }
}

std::string format_poly_list(const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < polys.size(); ++i) os << (i ? ", " : "") << polys[i].to_string();
  os << ')';
  return os.str();
}

}  // namespace frobcheck
