#include "aligned/exact/ratfn.hpp"

#include <cctype>
#include <stdexcept>

namespace aligned::exact {

RatFn::RatFn(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFn RatFn::variable() { return RatFn(UniPoly::identity()); }

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_ / lead;
    den_ = den_ / lead;
  }
}

Rational RatFn::operator()(const Rational& m) const {
  Rational d = den_(m);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(m) / d;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a) {
  RatFn r = a;
  r.num_ = -r.num_;
  return r;
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel first to keep the gcd in normalize() small.
  UniPoly g1 = a.den_.degree() > 0 && b.num_.degree() > 0 ? gcd(b.num_, a.den_) : UniPoly::constant(1);
  UniPoly g2 = b.den_.degree() > 0 && a.num_.degree() > 0 ? gcd(a.num_, b.den_) : UniPoly::constant(1);
  RatFn r;
  r.num_ = a.num_.exact_div(g2) * b.num_.exact_div(g1);
  r.den_ = a.den_.exact_div(g1) * b.den_.exact_div(g2);
  const Rational lead = r.den_.leading();
  if (lead != 1) {
    r.num_ = r.num_ / lead;
    r.den_ = r.den_ / lead;
  }
  return r;
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw std::domain_error("rational function divided by zero");
  return a * RatFn(b.den_, b.num_);
}

RatFn RatFn::pow(unsigned exponent) const {
  RatFn r;
  r.num_ = num_.pow(exponent);
  r.den_ = den_.pow(exponent);
  if (exponent == 0) r.num_ = UniPoly::constant(1);
  return r;
}

std::string RatFn::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFn parse() {
    RatFn r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFn expr() {
    RatFn acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFn term() {
    RatFn acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        RatFn d = unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFn unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFn power() {
    RatFn base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  RatFn primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFn r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'm') {
      ++pos_;
      return RatFn::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RatFn(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text) { return Parser(text).parse(); }

}  // namespace aligned::exact
