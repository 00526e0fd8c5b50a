#pragma once

// Dense univariate polynomials over a coefficient ring supplied as a policy
// object. Coefficients are stored low degree first; the zero polynomial is
// the empty vector and no stored polynomial has a zero leading coefficient.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszulq/error.hpp"

namespace kq::poly {

struct RationalRing {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const { return 1 / a; }
};

struct PrimeRing {
  std::uint64_t p;
  using T = std::uint64_t;
  T zero() const { return 0; }
  T one() const { return 1 % p; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return (a + p - b) % p; }
  T mul(T a, T b) const {
    return static_cast<T>((static_cast<unsigned __int128>(a) * b) % p);
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T inv(T a) const {
    // Fermat; p is prime.
    T result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
};

template <class R>
using Poly = std::vector<typename R::T>;

template <class R>
void trim(const R& ring, Poly<R>& a) {
  while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <class R>
int degree(const Poly<R>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <class R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.add(r[i], b[i]);
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> neg(const R& ring, const Poly<R>& a) {
  Poly<R> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(ring.neg(c));
  return r;
}

template <class R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return add(ring, a, neg(ring, b));
}

template <class R>
Poly<R> scale(const R& ring, const typename R::T& c, const Poly<R>& a) {
  if (ring.is_zero(c)) return {};
  Poly<R> r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(ring.mul(c, x));
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> r(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
  }
  trim(ring, r);
  return r;
}

/// Quotient and remainder; `b` must be nonzero.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const R& ring, Poly<R> a, const Poly<R>& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  if (a.size() < b.size()) return {{}, std::move(a)};
  const auto lead_inv = ring.inv(b.back());
  Poly<R> q(a.size() - b.size() + 1, ring.zero());
  for (int k = degree<R>(a) - degree<R>(b); k >= 0; --k) {
    const auto& top = a[k + b.size() - 1];
    if (ring.is_zero(top)) continue;
    auto c = ring.mul(top, lead_inv);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k + j] = ring.sub(a[k + j], ring.mul(c, b[j]));
    q[k] = std::move(c);
  }
  trim(ring, a);
  trim(ring, q);
  return {std::move(q), std::move(a)};
}

template <class R>
Poly<R> rem(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  return divmod(ring, a, b).second;
}

template <class R>
Poly<R> monic(const R& ring, const Poly<R>& a) {
  if (a.empty()) return a;
  return scale(ring, ring.inv(a.back()), a);
}

template <class R>
Poly<R> gcd(const R& ring, Poly<R> a, Poly<R> b) {
  while (!b.empty()) {
    auto r = rem(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

/// Inverse of `a` modulo `mod`, or empty if gcd(a, mod) != 1.
template <class R>
Poly<R> inverse_mod(const R& ring, const Poly<R>& a, const Poly<R>& mod) {
  // Invariant: old_s * a == old_r (mod `mod`).
  Poly<R> old_r = rem(ring, a, mod), r = mod;
  Poly<R> old_s{ring.one()}, s;
  while (!r.empty()) {
    auto [q, rr] = divmod(ring, old_r, r);
    auto ns = sub(ring, old_s, mul(ring, q, s));
    old_r = std::move(r);
    r = std::move(rr);
    old_s = std::move(s);
    s = std::move(ns);
  }
  if (old_r.size() != 1) return {};
  return rem(ring, scale(ring, ring.inv(old_r[0]), old_s), mod);
}

template <class R>
Poly<R> mulmod(const R& ring, const Poly<R>& a, const Poly<R>& b, const Poly<R>& mod) {
  return rem(ring, mul(ring, a, b), mod);
}

template <class R>
Poly<R> powmod(const R& ring, Poly<R> base, std::uint64_t e, const Poly<R>& mod) {
  Poly<R> result = rem(ring, Poly<R>{ring.one()}, mod);
  base = rem(ring, base, mod);
  while (e) {
    if (e & 1) result = mulmod(ring, result, base, mod);
    base = mulmod(ring, base, base, mod);
    e >>= 1;
  }
  return result;
}

/// x^D - 1 = prod_{e | D} Phi_e, so Phi_D is x^D - 1 divided by the
/// cyclotomic polynomials of the proper divisors.
inline Poly<RationalRing> cyclotomic_polynomial(unsigned D) {
  const RationalRing Q;
  Poly<RationalRing> f(D + 1, mpq_class(0));
  f[0] = -1;
  f[D] = 1;
  for (unsigned e = 1; e < D; ++e) {
    if (D % e) continue;
    f = divmod(Q, f, cyclotomic_polynomial(e)).first;
  }
  return f;
}

/// Irreducibility over F_p: f (degree k) is irreducible iff
/// gcd(f, x^{p^i} - x) = 1 for 1 <= i <= k/2.
inline bool is_irreducible(const PrimeRing& F, const Poly<PrimeRing>& f) {
  const int k = degree<PrimeRing>(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly<PrimeRing> x{0, 1};
  Poly<PrimeRing> frob = x;
  for (int i = 1; i <= k / 2; ++i) {
    frob = powmod(F, frob, F.p, f);
    auto g = gcd(F, f, sub(F, frob, x));
    if (g.size() != 1) return false;
  }
  return true;
}

std::string to_string(const Poly<RationalRing>& a, char var);
std::string to_string(const Poly<PrimeRing>& a, char var);

}  // namespace kq::poly
