#include "aligned/exact/resultant.hpp"

#include <stdexcept>
#include <utility>

namespace aligned::exact {

int BiPoly::degree() const {
  for (int k = static_cast<int>(terms.size()) - 1; k >= 0; --k) {
    if (!terms[static_cast<std::size_t>(k)].is_zero()) return k;
  }
  return -1;
}

UniPoly BiPoly::specialize(const Rational& surviving) const {
  std::vector<Rational> c;
  c.reserve(terms.size());
  for (const auto& t : terms) c.push_back(t(surviving));
  return UniPoly(std::move(c));
}

UniPoly determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  int sign_flip = 1;
  UniPoly prev_pivot = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev_pivot);
      }
      m[i][k] = UniPoly{};
    }
    prev_pivot = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return sign_flip > 0 ? det : -det;
}

UniPoly resultant(const BiPoly& p, const BiPoly& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp <= 0 && dq <= 0) {
    throw std::invalid_argument("resultant: both polynomials are constant in the eliminated variable");
  }
  if (dp < 0 || dq < 0) return {};
  const std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
  // Rows hold coefficients from the leading term down.
  for (int r = 0; r < dq; ++r) {
    for (int k = 0; k <= dp; ++k) {
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p.terms[static_cast<std::size_t>(dp - k)];
    }
  }
  for (int r = 0; r < dp; ++r) {
    for (int k = 0; k <= dq; ++k) {
      s[static_cast<std::size_t>(dq + r)][static_cast<std::size_t>(r + k)] = q.terms[static_cast<std::size_t>(dq - k)];
    }
  }
  return determinant(std::move(s));
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  BiPoly bp, bq;
  for (const auto& c : p.coefficients()) bp.terms.push_back(UniPoly::constant(c));
  for (const auto& c : q.coefficients()) bq.terms.push_back(UniPoly::constant(c));
  if (bp.degree() <= 0 && bq.degree() <= 0) {
    // Res of two constants is 1 by convention.
    return 1;
  }
  return resultant(bp, bq).coeff(0);
}

}  // namespace aligned::exact
