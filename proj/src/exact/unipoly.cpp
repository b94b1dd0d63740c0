#include "aligned/exact/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace aligned::exact {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p *= UniPoly{Rational(-r), Rational(1)};
  return p;
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

double UniPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Interval UniPoly::operator()(const Interval& x) const {
  Interval acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

UniPoly UniPoly::shifted(const Rational& shift) const {
  // Horner in polynomial arithmetic: p(x + s)
  UniPoly acc;
  const UniPoly lin{shift, Rational(1)};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + constant(*it);
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<Rational> v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly operator/(const UniPoly& p, const Rational& c) {
  if (c == 0) throw std::domain_error("polynomial divided by zero scalar");
  return Rational(1 / c) * p;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly{}, *this};
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = exact::abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || k == 0) out << exact::to_string(mag);
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  return p * make_rational(den_lcm, num_gcd);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = primitive_part(a);
  UniPoly y = primitive_part(b);
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = primitive_part(r);
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? UniPoly{} : UniPoly::constant(1);
  return p.exact_div(gcd(p, p.derivative())).monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() <= 0) return out;
  const UniPoly dp = p.derivative();
  UniPoly a = gcd(p, dp);
  UniPoly b = p.exact_div(a);
  UniPoly c = dp.exact_div(a);
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::pair<int, UniPoly> divide_out(const UniPoly& p, const UniPoly& factor) {
  if (factor.degree() <= 0) throw std::invalid_argument("divide_out needs a nonconstant factor");
  int count = 0;
  UniPoly rest = p;
  while (!rest.is_zero()) {
    auto [q, r] = rest.divmod(factor);
    if (!r.is_zero()) break;
    rest = std::move(q);
    ++count;
  }
  return {count, rest};
}

}  // namespace aligned::exact
