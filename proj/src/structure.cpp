#include "koszulq/structure.hpp"

#include <numeric>

namespace kq {

namespace {

constexpr const char* kCaseNames[] = {"not_root_of_unity", "even_or_char2", "odd_d_0mod4",
                                      "odd_d_2mod4", "odd_d_odd"};

struct Lengths {
  long long Lx, Ly, Lw, sigma_d;
  unsigned p;
};

Lengths lengths_for(CaseTag tag, int m, long long d) {
  switch (tag) {
    case CaseTag::even_or_char2:
    case CaseTag::odd_d_0mod4:
      return {d * m, d * m, 2 * d, d, static_cast<unsigned>(m)};
    case CaseTag::odd_d_2mod4:
      return {d * m, d * m, d, d / 2, static_cast<unsigned>(2 * m)};
    case CaseTag::odd_d_odd:
      return {2 * d * m, 2 * d * m, 4 * d, 2 * d, static_cast<unsigned>(m)};
    case CaseTag::not_root_of_unity:
      break;
  }
  throw NotApplicable("zeta is not a root of unity: the centre is K and has no generators");
}

long long finite_d(const QParams& params) {
  if (!params.d()) throw NotApplicable("zeta is not a root of unity");
  return static_cast<long long>(*params.d());
}

// prod_{l=1}^{L} prod_{k=1}^{K(l)} (q_k ... q_{k+len-1})^{-1}
template <class Upper>
Scalar inverse_double_product(const QParams& params, long long L, Upper upper, long long len) {
  Scalar prod = params.field()->one();
  for (long long l = 1; l <= L; ++l)
    for (long long k = 1; k <= upper(l); ++k) prod *= params.q_interval_product(k, len);
  return prod.inverse();
}

std::string scaled_xy(const Scalar& c) {
  if (c.is_one()) return "x*y";
  if ((-c).is_one()) return "-x*y";
  return "(" + c.short_string() + ")*x*y";
}

std::string w_power(unsigned p) { return p == 1 ? "w" : "w^" + std::to_string(p); }

// Forward differences of order 3 along an arithmetic progression.
bool third_differences_vanish(std::vector<long long> v) {
  for (int order = 0; order < 3; ++order) {
    for (std::size_t k = 0; k + 1 < v.size(); ++k) v[k] = v[k + 1] - v[k];
    v.pop_back();
  }
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

using IntPoly = std::vector<long long>;

IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly one_minus_t_pow(long long k) {
  IntPoly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = 1;
  p[k] -= 1;
  return p;
}

// Multiplicity of t = 1 as a root.
unsigned order_at_one(IntPoly p) {
  unsigned order = 0;
  for (;;) {
    long long at_one = std::accumulate(p.begin(), p.end(), 0LL);
    if (at_one != 0 || p.size() <= 1) return order;
    // Synthetic division by (t - 1), from the top coefficient down.
    IntPoly q(p.size() - 1, 0);
    long long carry = 0;
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
      carry += p[k];
      q[k - 1] = carry;
    }
    p = std::move(q);
    ++order;
  }
}

}  // namespace

std::string case_name(CaseTag tag) { return kCaseNames[static_cast<int>(tag)]; }

std::optional<CaseTag> parse_case(const std::string& name) {
  for (int k = 0; k < 5; ++k)
    if (name == kCaseNames[k]) return static_cast<CaseTag>(k);
  return std::nullopt;
}

CaseTag classify_case(int m, std::uint64_t characteristic, const Order& d) {
  if (!d) return CaseTag::not_root_of_unity;
  if (m % 2 == 0 || characteristic == 2) return CaseTag::even_or_char2;
  if (*d % 4 == 0) return CaseTag::odd_d_0mod4;
  if (*d % 4 == 2) return CaseTag::odd_d_2mod4;
  return CaseTag::odd_d_odd;
}

CaseTag classify_case(const QParams& params) {
  return classify_case(params.m(), params.field()->characteristic(), params.d());
}

Scalar epsilon(const QParams& params, CaseTag tag) {
  const long long d = finite_d(params);
  const long long m = params.m();
  const auto& F = params.field();
  switch (tag) {
    case CaseTag::even_or_char2: {
      Scalar sign = F->characteristic() == 2 ? F->one() : sign_power(F, m * d / 2);
      return sign * inverse_double_product(params, m - 1, [&](long long l) { return l * d; }, d);
    }
    case CaseTag::odd_d_0mod4:
      return inverse_double_product(params, m - 1, [&](long long l) { return l * d; }, d);
    case CaseTag::odd_d_2mod4:
      return inverse_double_product(params, 2 * m - 1, [&](long long l) { return l * d / 2; }, d);
    case CaseTag::odd_d_odd:
      return inverse_double_product(params, m - 1, [&](long long l) { return 2 * l * d; }, 2 * d);
    case CaseTag::not_root_of_unity:
      break;
  }
  throw NotApplicable("zeta is not a root of unity");
}

Scalar epsilon_from_recursion(const QParams& params, CaseTag tag) {
  const Lengths L = lengths_for(tag, params.m(), finite_d(params));
  const auto& F = params.field();
  Scalar eps = F->one();
  for (long long l = 1; l < static_cast<long long>(L.p); ++l) {
    eps *= sign_power(F, l * L.sigma_d * L.sigma_d);
    for (long long k = 1; k <= l * L.sigma_d; ++k) eps *= params.q_interval_product(k, L.sigma_d);
  }
  return eps.inverse();
}

CentralGenerators build_generators(const QParamsHandle& params) {
  const QParams& P = *params;
  const CaseTag tag = classify_case(P);
  const long long d = finite_d(P);
  const int m = P.m();
  const Lengths L = lengths_for(tag, m, d);
  if (static_cast<long long>(L.p) * L.Lw != L.Lx + L.Ly)
    throw Error("relation is not length-homogeneous");

  const auto& F = P.field();
  ExtElement x(params), y(params), w(params);
  Scalar coeff = F->one();
  for (int i = 0; i < m; ++i) {
    x.add_term({i, L.Lx, 0}, F->one());
    y.add_term({i, 0, L.Ly}, F->one());
    // c_i = (-1)^{i sigma d} prod_{k=1}^{i} (q_k ... q_{k+sigma d-1})^{-1}
    if (i > 0) coeff = coeff * sign_power(F, L.sigma_d) * P.q_interval_product(i, L.sigma_d).inverse();
    w.add_term({i, L.sigma_d, L.sigma_d}, coeff);
  }
  return CentralGenerators{std::move(x), std::move(y), std::move(w), L.Lx, L.Ly, L.Lw,
                           L.sigma_d,    L.p,          epsilon(P, tag), epsilon_from_recursion(P, tag),
                           tag};
}

RelationCheck verify_relation(const CentralGenerators& gens) { return verify_relation(gens, gens.epsilon); }

RelationCheck verify_relation(const CentralGenerators& gens, const Scalar& eps) {
  ExtElement diff = gens.w.power(gens.p) - (gens.x * gens.y).scaled(eps);
  const bool holds = diff.is_zero();
  return {holds, std::move(diff)};
}

std::string relation_string(unsigned p, const Scalar& eps) { return w_power(p) + " = " + scaled_xy(eps); }

PresentedRing presented_ring(const CentralGenerators& gens) {
  return {gens.Lx, gens.Ly, gens.Lw, gens.p, gens.epsilon};
}

std::vector<long long> hilbert_coefficients(const PresentedRing& ring, long long N) {
  if (N < 0) throw InvalidArgument("degree bound must be nonnegative");
  std::vector<long long> c(static_cast<std::size_t>(N) + 1, 0);
  c[0] = 1;
  const long long rel = static_cast<long long>(ring.p) * ring.Lw;
  if (rel <= N) c[rel] -= 1;
  for (long long L : {ring.Lx, ring.Ly, ring.Lw})
    for (long long n = L; n <= N; ++n) c[n] += c[n - L];
  return c;
}

unsigned krull_dimension(const std::optional<PresentedRing>& ring) {
  if (!ring) return 0;
  const IntPoly num = one_minus_t_pow(static_cast<long long>(ring->p) * ring->Lw);
  const IntPoly den =
      int_mul(int_mul(one_minus_t_pow(ring->Lx), one_minus_t_pow(ring->Ly)), one_minus_t_pow(ring->Lw));
  const unsigned zn = order_at_one(num), zd = order_at_one(den);
  return zd > zn ? zd - zn : 0;
}

long long hilbert_period(const PresentedRing& ring) {
  return std::lcm(std::lcm(ring.Lx, ring.Ly), ring.Lw);
}

QuadraticFit partial_sums_quadratic(const std::vector<std::size_t>& dims, long long period) {
  if (period <= 0) throw InvalidArgument("period must be positive");
  std::vector<long long> sums;
  long long running = 0;
  for (auto v : dims) sums.push_back(running += static_cast<long long>(v));
  QuadraticFit fit{true, 0};
  for (long long r = 0; r < period; ++r) {
    std::vector<long long> samples;
    for (long long n = r; n < static_cast<long long>(sums.size()); n += period) samples.push_back(sums[n]);
    if (samples.size() < 4) continue;
    ++fit.tested;
    if (!third_differences_vanish(samples)) fit.fits = false;
  }
  if (fit.tested == 0) fit.fits = false;
  return fit;
}

long long default_degree_bound(const QParams& params) {
  const CaseTag tag = classify_case(params);
  if (tag == CaseTag::not_root_of_unity) return 12;
  const Lengths L = lengths_for(tag, params.m(), finite_d(params));
  return L.Lx + L.Ly + 2 * L.Lw;
}

StructureReport verify_structure_theorem(const QParamsHandle& params, long long N, CentreBasis* cache,
                                         long long central_bound) {
  StructureReport r;
  r.tag = classify_case(*params);
  r.N = N;
  r.solver_dims = centre_dims(params, N, cache);
  if (r.tag == CaseTag::not_root_of_unity) {
    r.hilbert_dims.assign(static_cast<std::size_t>(N) + 1, 0);
    r.hilbert_dims[0] = 1;
    r.x_central = r.y_central = r.w_central = true;
  } else {
    r.generators = build_generators(params);
    r.x_central = is_central(r.generators->x, central_bound);
    r.y_central = is_central(r.generators->y, central_bound);
    r.w_central = is_central(r.generators->w, central_bound);
    r.relation = verify_relation(*r.generators);
    r.derived_relation = verify_relation(*r.generators, r.generators->epsilon_derived);
    r.hilbert_dims = hilbert_coefficients(presented_ring(*r.generators), N);
  }
  r.dims_match = true;
  for (long long n = 0; n <= N; ++n)
    if (static_cast<long long>(r.solver_dims[n]) != r.hilbert_dims[n]) {
      r.dims_match = false;
      r.first_failing_degree = n;
      break;
    }
  const bool relation_ok = !r.relation || r.relation->holds;
  r.pass = r.x_central && r.y_central && r.w_central && relation_ok && r.dims_match;
  return r;
}

FiniteGenerationResult verify_finite_generation(const QParamsHandle& params, long long N) {
  FiniteGenerationResult out;
  if (classify_case(*params) == CaseTag::not_root_of_unity) {
    const auto dims = centre_dims(params, N);
    long long positive = 0;
    for (std::size_t n = 1; n < dims.size(); ++n) positive += static_cast<long long>(dims[n]);
    out.finitely_generated = false;
    out.detail = "zeta is not a root of unity; centre dimensions in degrees 1.." + std::to_string(N) +
                 " sum to " + std::to_string(positive) + ", so no central element absorbs growth";
    return out;
  }
  const CentralGenerators gens = build_generators(params);
  const long long Lx = gens.Lx;
  std::vector<ExtElement> xpow{ExtElement::unit(params)}, ypow{ExtElement::unit(params)};
  auto power_of = [&](std::vector<ExtElement>& cache, const ExtElement& g, long long k) {
    while (static_cast<long long>(cache.size()) <= k) cache.push_back(cache.back() * g);
    return cache[k];
  };
  for (long long n = 0; n <= N; ++n)
    for (const auto& mono : grade_basis(*params, n)) {
      if (mono.s <= Lx && mono.t <= Lx) continue;
      long long a = 0, b = 0, s = mono.s, t = mono.t;
      while (s > Lx) s -= Lx, ++a;
      while (t > Lx) t -= Lx, ++b;
      const ExtElement z = power_of(xpow, gens.x, a) * power_of(ypow, gens.y, b);
      const ExtElement product = z * ExtElement::monomial(params, {mono.i, s, t});
      ++out.monomials_checked;
      if (product.terms().size() != 1 || !(product.terms().begin()->first == mono)) {
        out.detail = "no decomposition for " + mono.to_string(params->m());
        return out;
      }
    }
  out.finitely_generated = true;
  out.detail = "every monomial of length <= " + std::to_string(N) +
               " is a nonzero multiple of x^a y^b g with g of exponents <= " + std::to_string(Lx);
  return out;
}

PresentationRecord hh_mod_nil_report(const QParamsHandle& params) {
  PresentationRecord rec;
  rec.note = "HH*/N identified with Z_gr(E) by the cited isomorphism (imported, not derived)";
  if (classify_case(*params) == CaseTag::not_root_of_unity) {
    rec.presentation = "K";
    rec.krull_dimension = krull_dimension(std::nullopt);
    return rec;
  }
  const CentralGenerators gens = build_generators(params);
  // The presentation carries the scalar the relation actually satisfies.
  const Scalar& eps = gens.epsilon_derived;
  std::string tail;
  if (eps.is_one()) {
    tail = " - x*y";
  } else if ((-eps).is_one()) {
    tail = " + x*y";
  } else {
    tail = " - (" + eps.short_string() + ")*x*y";
  }
  rec.presentation = "K[x,y,w]/<" + w_power(gens.p) + tail + ">";
  rec.Lx = gens.Lx;
  rec.Ly = gens.Ly;
  rec.Lw = gens.Lw;
  rec.p = gens.p;
  rec.epsilon = eps.short_string();
  if (gens.epsilon != eps) rec.note += "; printed eps " + gens.epsilon.short_string() + " differs";
  rec.krull_dimension = krull_dimension(presented_ring(gens));
  return rec;
}

}  // namespace kq
