#include "aligned/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace aligned::exact {

namespace {

Integer pow10(long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return r;
}

Rational pow10q(long k) {
  return k >= 0 ? Rational(pow10(k)) : Rational(Integer(1), pow10(-k));
}

// Round a nonnegative rational to the nearest integer, ties away from zero.
Integer round_half_up(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    return make_rational(n, d);
  }

  // Decimal / scientific form: [sign] digits [. digits] [e [sign] digits]
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') {
    negative = s[i] == '-';
    ++i;
  }
  std::string mantissa;
  long scale = 0;
  bool seen_digit = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    mantissa += s[i++];
    seen_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mantissa += s[i++];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string_view exp = s.substr(i);
    bool exp_negative = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      exp_negative = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) {
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    }
    long e = std::stol(std::string(exp));
    scale += exp_negative ? -e : e;
    i = s.size();
  }
  if (i != s.size()) throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");

  Rational q = Rational(Integer(mantissa, 10)) * pow10q(scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_scientific(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  Rational a = abs(q);
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (a >= pow10q(e + 1)) ++e;
  while (a < pow10q(e)) --e;
  Integer mant = round_half_up(a * pow10q(digits - 1 - e));
  if (mant >= pow10(digits)) {
    mant = round_half_up(a * pow10q(digits - 2 - e));
    ++e;
  }
  std::string ds = mant.get_str();
  std::string out = q < 0 ? "-" : "";
  out += ds.substr(0, 1);
  if (ds.size() > 1) out += "." + ds.substr(1);
  char buf[16];
  std::snprintf(buf, sizeof buf, "e%+03ld", e);
  return out + buf;
}

std::string to_fixed(const Rational& q, int decimals) {
  if (decimals < 0) decimals = 0;
  Integer scaled = round_half_up(abs(q) * pow10q(decimals));
  std::string ds = scaled.get_str();
  if (static_cast<int>(ds.size()) <= decimals) ds.insert(0, decimals + 1 - ds.size(), '0');
  std::string out = (q < 0 && scaled != 0) ? "-" : "";
  out += ds.substr(0, ds.size() - decimals);
  if (decimals > 0) out += "." + ds.substr(ds.size() - decimals);
  return out;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow(const Rational& q, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), exponent);
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite double");
  return Rational(value);
}

Rational pow2(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace aligned::exact
