#include "aligned/exact/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace aligned::exact {

namespace {

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Narrow a bracket of a squarefree polynomial's single root by one bisection.
// Returns true if the midpoint turned out to be the root.
bool bisect_once(const UniPoly& sqf, RootInterval& iv) {
  Rational m = iv.mid();
  Rational vm = sqf(m);
  if (vm == 0) {
    iv.lo = iv.hi = m;
    return true;
  }
  if (sign(sqf(iv.lo)) * sign(vm) < 0) {
    iv.hi = m;
  } else {
    iv.lo = m;
  }
  return false;
}

// Round x to a multiple of 2^-bits (toward the nearest).
Rational snap(const Rational& x, long bits) {
  Rational scaled = x * pow2(bits);
  Integer r;
  Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(r.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return Rational(r) * pow2(-bits);
}

long bits_for(const Rational& eps) {
  // smallest k with 2^-k <= eps
  long k = 0;
  Rational p = 1;
  while (p > eps) {
    p /= 2;
    ++k;
  }
  return k;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  UniPoly f = squarefree_part(p);
  chain_.push_back(f);
  if (f.degree() <= 0) return;
  chain_.push_back(f.derivative());
  while (true) {
    UniPoly r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs and curbs coefficient growth.
    UniPoly next = primitive_part(-r);
    chain_.push_back(std::move(next));
  }
}

int SturmChain::variations(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign(q(x)));
  return count_sign_changes(s);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sign(q.leading()));
  return count_sign_changes(s);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sign(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  return count_sign_changes(s);
}

int SturmChain::count(const Rational& lo, const Rational& hi) const {
  if (lo >= hi) throw std::invalid_argument("Sturm count needs lo < hi");
  return variations(lo) - variations(hi);
}

int SturmChain::count_above(const Rational& lo) const { return variations(lo) - variations_at_pos_infinity(); }

int SturmChain::count_all() const { return variations_at_neg_infinity() - variations_at_pos_infinity(); }

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (lo >= hi) throw std::invalid_argument("Sturm count needs lo < hi");
  return SturmChain(p).count(lo, hi);
}

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / lead)));
  Rational bound = 1 + m;
  Rational b = 1;
  while (b <= bound) b *= 2;
  return b;
}

namespace {

struct Pending {
  RootInterval iv;
  const UniPoly* sqf;
  const SturmChain* chain;
};

void isolate_in(const UniPoly& sqf, const SturmChain& chain, Rational lo, Rational hi, int mult,
                std::vector<Pending>& out) {
  // Invariant: roots of interest are in (lo, hi]. Isolating intervals are
  // shrunk to width <= 1 so they land between consecutive integers.
  if (sqf.degree() == 1) {
    Rational r = -sqf.coeff(0) / sqf.coeff(1);
    if (lo < r && r <= hi) out.push_back({{r, r, mult}, &sqf, &chain});
    return;
  }
  std::vector<std::pair<Rational, Rational>> stack{{std::move(lo), std::move(hi)}};
  while (!stack.empty()) {
    auto [a, b] = std::move(stack.back());
    stack.pop_back();
    int n = chain.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      if (sqf(b) == 0) {
        out.push_back({{b, b, mult}, &sqf, &chain});
        continue;
      }
      if (sqf(a) != 0 && b - a <= 1) {
        out.push_back({{a, b, mult}, &sqf, &chain});
        continue;
      }
    }
    Rational m = (a + b) / 2;
    stack.emplace_back(m, b);
    stack.emplace_back(a, m);
  }
}

bool overlaps(const RootInterval& x, const RootInterval& y) {
  // x precedes y in sort order; touching endpoints count as overlap unless
  // both sides are open there.
  if (x.is_exact() && y.is_exact()) return x.lo == y.lo;
  if (x.is_exact()) return y.lo < x.hi && x.hi < y.hi;
  if (y.is_exact()) return x.lo < y.lo && y.lo < x.hi;
  return y.lo < x.hi;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  auto factors = squarefree_decomposition(p);
  std::vector<SturmChain> chains;
  chains.reserve(factors.size());
  for (const auto& [f, m] : factors) chains.emplace_back(f);

  std::vector<Pending> found;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Rational b = root_bound(factors[i].first);
    isolate_in(factors[i].first, chains[i], -b, b, factors[i].second, found);
  }

  auto by_position = [](const Pending& x, const Pending& y) {
    return x.iv.lo != y.iv.lo ? x.iv.lo < y.iv.lo : x.iv.hi < y.iv.hi;
  };
  // Roots of distinct coprime factors are distinct; shrink until disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(found.begin(), found.end(), by_position);
    for (std::size_t i = 0; i + 1 < found.size(); ++i) {
      if (!overlaps(found[i].iv, found[i + 1].iv)) continue;
      for (auto* pend : {&found[i], &found[i + 1]}) {
        if (!pend->iv.is_exact()) bisect_once(*pend->sqf, pend->iv);
      }
      changed = true;
    }
  }

  std::vector<RootInterval> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(f.iv);
  return out;
}

RootInterval refine_root(const UniPoly& p, const RootInterval& iv, const Rational& eps) {
  if (iv.multiplicity != 1) {
    throw std::invalid_argument("refine_root needs a simple root; refine the squarefree part instead");
  }
  if (eps <= 0) throw std::invalid_argument("refine_root needs eps > 0");
  RootInterval r = iv;
  if (r.is_exact()) return r;
  if (p(r.lo) == 0) return {r.lo, r.lo, 1};
  if (p(r.hi) == 0) return {r.hi, r.hi, 1};
  if (sign(p(r.lo)) * sign(p(r.hi)) > 0) throw std::invalid_argument("refine_root: bracket has no sign change");

  const UniPoly dp = p.derivative();
  const long bits = bits_for(eps) + 4;
  // Newton is tried once the bracket is this narrow relative to its start.
  const Rational newton_start = r.width() / 64;

  while (r.width() > eps) {
    if (r.width() <= newton_start) {
      Rational m = r.mid();
      Rational slope = dp(m);
      if (slope != 0) {
        Rational x = snap(m - p(m) / slope, bits);
        Rational h = std::max(Rational(r.width() / 1024), Rational(eps / 4));
        Rational a = std::max(Rational(x - h), r.lo);
        Rational b = std::min(Rational(x + h), r.hi);
        if (a < b) {
          Rational pa = p(a), pb = p(b);
          if (pa == 0) return {a, a, 1};
          if (pb == 0) return {b, b, 1};
          if (sign(pa) * sign(pb) < 0) {
            r.lo = a;
            r.hi = b;
            continue;
          }
        }
      }
    }
    Rational m = r.mid();
    Rational pm = p(m);
    if (pm == 0) return {m, m, 1};
    if (sign(p(r.lo)) * sign(pm) < 0) {
      r.hi = m;
    } else {
      r.lo = m;
    }
  }
  return r;
}

int sign_at_root(const UniPoly& p, RootInterval& iv, const UniPoly& f) {
  if (iv.is_exact()) return sign(f(iv.lo));
  if (f.is_zero()) return 0;
  const UniPoly sqf = squarefree_part(p);
  const UniPoly g = gcd(sqf, f);
  if (g.degree() > 0 && sturm_root_count(g, iv.lo, iv.hi) > 0) return 0;
  const SturmChain fchain(f);
  RootInterval w{iv.lo, iv.hi, 1};
  while (f(w.lo) == 0 || fchain.count(w.lo, w.hi) > 0) {
    if (bisect_once(sqf, w)) {
      iv.lo = iv.hi = w.lo;
      return sign(f(w.lo));
    }
  }
  iv.lo = w.lo;
  iv.hi = w.hi;
  return sign(f(w.hi));
}

}  // namespace aligned::exact
