#pragma once

// Small helpers shared by the test binaries.

#include <numeric>
#include <random>
#include <vector>

#include "koszulq/qparams.hpp"

namespace kq::test {

/// One shared Q, so scalars from different helpers mix.
inline FieldHandle rationals() {
  static const FieldHandle Q = make_field(FieldSpec::rationals());
  return Q;
}

inline QParamsHandle rational_q(const std::vector<long long>& values) {
  auto Q = rationals();
  std::vector<Scalar> q;
  for (auto v : values) q.push_back(Q->from_int(v));
  return QParams::make(Q, q);
}

inline QParamsHandle make_q(const FieldHandle& F, std::vector<Scalar> q) {
  return QParams::make(F, std::move(q));
}

/// Random nonzero rational with small numerator and denominator.
inline Scalar small_unit(const FieldHandle& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 7), den(1, 5), sign(0, 1);
  Scalar r = F->from_int(num(rng)) / F->from_int(den(rng));
  return sign(rng) ? -r : r;
}

/// q over Q(zeta_{2d}) with q_i = r_i z^{e_i}, prod r_i = 1 and
/// z^{sum e_i} a primitive d-th root of unity (sum e_i = 2k, gcd(k, d) = 1).
inline QParamsHandle random_q_with_order(int m, unsigned d, std::mt19937_64& rng) {
  const unsigned D = 2 * d;
  auto F = make_field(FieldSpec::cyclotomic(D));
  const Scalar z = F->generator();
  std::uniform_int_distribution<unsigned> exp(0, D - 1);
  std::vector<unsigned> units;
  for (unsigned k = 1; k <= d; ++k)
    if (std::gcd(k, d) == 1) units.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  const unsigned target = (2 * units[pick(rng)]) % D;
  std::vector<Scalar> q;
  Scalar radial = F->one();
  unsigned used = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const unsigned e = exp(rng);
    const Scalar r = small_unit(F, rng);
    used = (used + e) % D;
    radial *= r;
    q.push_back(r * z.pow(e));
  }
  q.push_back(radial.inverse() * z.pow((target + D - used) % D));
  return QParams::make(F, q);
}

}  // namespace kq::test
