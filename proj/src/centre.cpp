#include "koszulq/centre.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace kq {

std::vector<ExtElement> solve_degree(const QParamsHandle& params, long long n) {
  const QParams& P = *params;
  const int m = P.m();
  const auto basis = grade_basis(P, n);
  RowReducer rows(P.field(), basis.size());

  // e_i z = z e_i: no support off the loops at a vertex.
  for (const auto& x : basis)
    if (x.terminus(m) != x.i) rows.add_row({{grade_index(P, x), P.field()->one()}});

  // g z - (-1)^n z g = 0 in grade n + 1, one row per output monomial.
  const Scalar sign = sign_power(P.field(), n);
  for (int k = 0; k < m; ++k)
    for (const auto& g : {arrow_a(k), arrow_abar(k, m)}) {
      const auto left = mult_matrix(P, g, Side::left, n);
      const auto right = mult_matrix(P, g, Side::right, n);
      std::map<std::size_t, SparseVec> constraint;
      for (std::size_t col = 0; col < basis.size(); ++col) {
        for (const auto& [r, v] : left[col]) constraint[r].emplace_back(col, v);
        for (const auto& [r, v] : right[col]) constraint[r].emplace_back(col, -(sign * v));
      }
      for (auto& [_, row] : constraint) rows.add_row(std::move(row));
    }

  RowReducer kernel(P.field(), basis.size());
  for (auto& v : rows.kernel()) kernel.add_row(std::move(v));
  std::vector<ExtElement> out;
  for (const auto& v : kernel.rref_rows()) out.push_back(from_grade_vector(params, n, v));
  return out;
}

bool is_central(const ExtElement& z, long long L) {
  if (z.is_zero()) return true;
  const auto n = z.length();
  if (!n) throw InvalidArgument("is_central needs a length-homogeneous element");
  const auto& params = z.params();
  for (long long l = 0; l <= L; ++l) {
    const Scalar sign = sign_power(params->field(), *n * l);
    for (const auto& g : grade_basis(*params, l)) {
      const ExtElement ge = ExtElement::monomial(params, g);
      if (z * ge != (ge * z).scaled(sign)) return false;
    }
  }
  return true;
}

unsigned configured_workers() {
  const char* env = std::getenv("KQ_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 64L));
}

std::vector<std::size_t> centre_dims(const QParamsHandle& params, long long N, CentreBasis* cache,
                                     unsigned workers) {
  if (N < 0) throw InvalidArgument("degree bound must be nonnegative");
  if (workers == 0) workers = configured_workers();
  std::vector<std::vector<ExtElement>> results(static_cast<std::size_t>(N + 1));
  std::atomic<long long> next{0};
  auto work = [&] {
    for (long long n; (n = next.fetch_add(1)) <= N;) results[n] = solve_degree(params, n);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<std::size_t> dims;
  for (long long n = 0; n <= N; ++n) {
    dims.push_back(results[n].size());
    if (cache) cache->by_degree[n] = std::move(results[n]);
  }
  return dims;
}

std::optional<CentralMonomialShape> central_shape(const ExtElement& z) {
  if (z.is_zero()) return std::nullopt;
  const int m = z.params()->m();
  const auto& first = z.terms().begin()->first;
  CentralMonomialShape shape{first.s, first.t, {}};
  shape.coefficients.assign(m, z.params()->field()->zero());
  for (const auto& [x, c] : z.terms()) {
    if (x.s != shape.s0 || x.t != shape.t0 || x.terminus(m) != x.i) return std::nullopt;
    shape.coefficients[x.i] = c;
  }
  return shape;
}

bool shape_recurrences_hold(const QParams& P, const CentralMonomialShape& shape) {
  const int m = P.m();
  const auto& F = P.field();
  for (int j = 0; j < m; ++j) {
    const Scalar& cj = shape.coefficients[j];
    const Scalar& next = shape.coefficients[(j + 1) % m];
    if (next != sign_power(F, shape.s0) * cj * P.q_interval_product(j + 1, shape.t0).inverse())
      return false;
    if (next != sign_power(F, shape.t0) * cj * P.q_interval_product(j + 1, shape.s0).inverse())
      return false;
  }
  return true;
}

bool shape_sign_conditions_hold(const QParams& P, const CentralMonomialShape& shape) {
  const auto& F = P.field();
  const long long m = P.m();
  return P.zeta().pow(shape.t0) == sign_power(F, m * shape.s0) &&
         P.zeta().pow(shape.s0) == sign_power(F, m * shape.t0) && (shape.s0 - shape.t0) % m == 0;
}

}  // namespace kq
