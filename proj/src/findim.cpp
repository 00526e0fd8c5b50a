#include "koszulq/findim.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace kq {

// ---------------------------------------------------------------------------
// StructureConstAlgebra

StructureConstAlgebra::StructureConstAlgebra(FieldHandle field, std::vector<std::string> labels,
                                             std::vector<std::vector<SparseVec>> table,
                                             SparseVec unit, std::optional<int> quiver_m)
    : field_(std::move(field)),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      quiver_m_(quiver_m) {
  const std::size_t n = labels_.size();
  if (table_.size() != n) throw InvalidArgument("multiplication table has wrong row count");
  for (const auto& row : table_)
    if (row.size() != n) throw InvalidArgument("multiplication table has wrong column count");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SparseVec ij = table_[i][j];
      for (std::size_t k = 0; k < n; ++k) {
        SparseVec left = multiply(ij, basis_vector(k));
        SparseVec right = multiply(basis_vector(i), table_[j][k]);
        if (left != right)
          throw NonAssociative("(" + labels_[i] + " * " + labels_[j] + ") * " + labels_[k] +
                               " != " + labels_[i] + " * (" + labels_[j] + " * " + labels_[k] +
                               ")");
      }
    }
  for (std::size_t k = 0; k < n; ++k) {
    if (multiply(unit_, basis_vector(k)) != basis_vector(k) ||
        multiply(basis_vector(k), unit_) != basis_vector(k))
      throw InvalidArgument("supplied unit does not act as identity on " + labels_[k]);
  }
}

std::optional<std::size_t> StructureConstAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

SparseVec StructureConstAlgebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y) {
      const SparseVec& p = table_[i][j];
      if (!p.empty()) out = axpy(out, xi * yj, p);
    }
  return out;
}

Matrix StructureConstAlgebra::left_mult_matrix(const SparseVec& x) const {
  Matrix M(field_, dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k)
    for (const auto& [r, v] : multiply(x, basis_vector(k))) M(r, k) = v;
  return M;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const FieldHandle& field, std::size_t ambient_dim,
                        const std::vector<SparseVec>& vectors) {
  RowReducer r(field, ambient_dim);
  for (const auto& v : vectors) r.add_row(v);
  return Subspace{ambient_dim, r.rref_rows(), r.pivots()};
}

bool Subspace::contains(const FieldHandle& field, const SparseVec& v) const {
  RowReducer r(field, ambient_dim);
  for (const auto& b : basis) r.add_row(b);
  return r.contains(v);
}

// ---------------------------------------------------------------------------
// Quiver algebras by rewriting

namespace {

// Arrow codes: a_i = i, abar_i = m + i.
struct Path {
  int start;
  std::vector<int> arrows;
  auto operator<=>(const Path&) const = default;
};

struct QuiverRewriter {
  int m;
  // abar_{j-1} a_{j-1} -> c[j] s_j + f[j] e_j
  std::vector<Scalar> c, f;

  int wrap(int i) const { return ((i % m) + m) % m; }
  bool is_bar(int code) const { return code >= m; }
  int idx(int code) const { return code % m; }
  int origin(int code) const { return is_bar(code) ? wrap(idx(code) + 1) : idx(code); }
  int terminus(int code) const { return is_bar(code) ? idx(code) : wrap(idx(code) + 1); }
  int end_vertex(const Path& p) const { return p.arrows.empty() ? p.start : terminus(p.arrows.back()); }

  void reduce(const Path& p, const Scalar& coeff, std::map<Path, Scalar>& out) const {
    if (coeff.is_zero()) return;
    for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k) {
      const int x = p.arrows[k], y = p.arrows[k + 1];
      const bool xb = is_bar(x), yb = is_bar(y);
      // In a valid path a_i is followed only by a_{i+1} or abar_i, and
      // abar_k only by abar_{k-1} or a_k.
      if (xb == yb) return;  // a_i a_{i+1} = 0, abar_{i-1} abar_{i-2} = 0
      if (xb && !yb) {
        const int j = wrap(idx(x) + 1);
        Path with_s{p.start, {}};
        with_s.arrows.insert(with_s.arrows.end(), p.arrows.begin(), p.arrows.begin() + k);
        with_s.arrows.push_back(j);
        with_s.arrows.push_back(m + j);
        with_s.arrows.insert(with_s.arrows.end(), p.arrows.begin() + k + 2, p.arrows.end());
        Path with_e{p.start, {}};
        with_e.arrows.insert(with_e.arrows.end(), p.arrows.begin(), p.arrows.begin() + k);
        with_e.arrows.insert(with_e.arrows.end(), p.arrows.begin() + k + 2, p.arrows.end());
        reduce(with_s, coeff * c[j], out);
        reduce(with_e, coeff * f[j], out);
        return;
      }
    }
    auto [it, inserted] = out.try_emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  Path basis_path(std::size_t k) const {
    const int b = static_cast<int>(k) / m, i = static_cast<int>(k) % m;
    switch (b) {
      case 0: return {i, {}};
      case 1: return {i, {i}};
      case 2: return {wrap(i + 1), {m + i}};
      default: return {i, {i, m + i}};
    }
  }

  std::size_t basis_index(const Path& p) const {
    const QuiverBasis qb{m};
    if (p.arrows.empty()) return qb.e(p.start);
    if (p.arrows.size() == 1) return is_bar(p.arrows[0]) ? qb.abar(idx(p.arrows[0])) : qb.a(p.arrows[0]);
    if (p.arrows.size() == 2 && !is_bar(p.arrows[0]) && p.arrows[1] == m + p.arrows[0])
      return qb.s(p.arrows[0]);
    throw Error("rewriting left a path outside the basis");
  }
};

std::vector<std::string> quiver_labels(int m) {
  std::vector<std::string> labels;
  for (const char* prefix : {"e", "a", "abar", "s"})
    for (int i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

StructureConstAlgebra build_quiver_algebra(const FieldHandle& field, int m, std::vector<Scalar> c,
                                           std::vector<Scalar> f) {
  if (m < 1) throw InvalidArgument("m must be positive");
  const QuiverRewriter rw{m, std::move(c), std::move(f)};
  const std::size_t n = 4 * static_cast<std::size_t>(m);
  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Path px = rw.basis_path(x), py = rw.basis_path(y);
      if (rw.end_vertex(px) != py.start) continue;
      Path joined = px;
      joined.arrows.insert(joined.arrows.end(), py.arrows.begin(), py.arrows.end());
      std::map<Path, Scalar> normal;
      rw.reduce(joined, field->one(), normal);
      SparseVec v;
      for (const auto& [p, coeff] : normal) v.emplace_back(rw.basis_index(p), coeff);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      table[x][y] = std::move(v);
    }
  SparseVec unit;
  for (int i = 0; i < m; ++i) unit.emplace_back(static_cast<std::size_t>(i), field->one());
  return StructureConstAlgebra(field, quiver_labels(m), std::move(table), std::move(unit), m);
}

}  // namespace

StructureConstAlgebra build_lambda_q(const QParams& params) {
  std::vector<Scalar> c, f;
  for (int j = 0; j < params.m(); ++j) {
    c.push_back(params.q_at(j));
    f.push_back(params.field()->zero());
  }
  return build_quiver_algebra(params.field(), params.m(), std::move(c), std::move(f));
}

StructureConstAlgebra build_deformed(const FieldHandle& field, int m, const DeformationParams& dp) {
  // a_j abar_j - abar_{j-1} a_{j-1} - t (-1)^j b2 e_j            (j >= 1)
  // a_0 abar_0 - abar_{m-1} a_{m-1} - t b2 e_0 - t b1 a_0 abar_0
  std::vector<Scalar> c, f;
  for (int j = 0; j < m; ++j) {
    c.push_back(j == 0 ? field->one() - dp.t * dp.b1 : field->one());
    f.push_back(-(dp.t * sign_power(field, j) * dp.b2));
  }
  return build_quiver_algebra(field, m, std::move(c), std::move(f));
}

StructureConstAlgebra product_of_fields(const FieldHandle& field, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  SparseVec unit;
  for (std::size_t k = 0; k < n; ++k) {
    labels.push_back(n == 1 ? "1" : "f" + std::to_string(k));
    table[k][k] = {{k, field->one()}};
    unit.emplace_back(k, field->one());
  }
  return StructureConstAlgebra(field, std::move(labels), std::move(table), std::move(unit));
}

// ---------------------------------------------------------------------------
// Radical, socle, quotients

Subspace radical(const StructureConstAlgebra& A) {
  const auto& F = A.field();
  const std::uint64_t p = F->characteristic();
  if (p != 0 && p <= A.dim())
    throw Unsupported("trace-form radical needs characteristic 0 or > " + std::to_string(A.dim()));
  const std::size_t n = A.dim();
  std::vector<Scalar> trace(n, F->zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [c, v] : A.product(r, j))
        if (c == j) trace[r] += v;
  RowReducer form(F, n);
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec row;
    for (std::size_t l = 0; l < n; ++l) {
      Scalar t = F->zero();
      for (const auto& [r, v] : A.product(k, l)) t += v * trace[r];
      if (!t.is_zero()) row.emplace_back(l, t);
    }
    form.add_row(row);
  }
  return Subspace::span(F, n, form.kernel());
}

bool is_two_sided_ideal(const StructureConstAlgebra& A, const Subspace& S) {
  RowReducer r(A.field(), A.dim());
  for (const auto& b : S.basis) r.add_row(b);
  for (std::size_t k = 0; k < A.dim(); ++k)
    for (const auto& s : S.basis) {
      if (!r.contains(A.multiply(A.basis_vector(k), s))) return false;
      if (!r.contains(A.multiply(s, A.basis_vector(k)))) return false;
    }
  return true;
}

std::optional<std::size_t> nilpotency_index(const StructureConstAlgebra& A, const Subspace& S) {
  if (S.dim() == 0) return 1;
  Subspace power = S;
  for (std::size_t k = 1; k <= A.dim() + 1; ++k) {
    std::vector<SparseVec> products;
    for (const auto& x : power.basis)
      for (const auto& s : S.basis) products.push_back(A.multiply(x, s));
    Subspace next = Subspace::span(A.field(), A.dim(), products);
    if (next.dim() == 0) return k + 1;
    if (next.dim() == power.dim()) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

Subspace arrow_ideal(const StructureConstAlgebra& A) {
  if (!A.quiver_m()) throw NotApplicable("arrow ideal needs a quiver-shaped basis");
  const int m = *A.quiver_m();
  std::vector<SparseVec> gens;
  for (std::size_t k = m; k < A.dim(); ++k) gens.push_back(A.basis_vector(k));
  Subspace S = Subspace::span(A.field(), A.dim(), gens);
  if (!is_two_sided_ideal(A, S) || !nilpotency_index(A, S))
    throw NotApplicable("arrow span is not a nilpotent ideal (algebra is not graded)");
  return S;
}

Subspace left_socle(const StructureConstAlgebra& A, const Subspace& rad) {
  RowReducer r(A.field(), A.dim());
  for (const auto& x : rad.basis) {
    const Matrix L = A.left_mult_matrix(x);
    for (std::size_t i = 0; i < A.dim(); ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < A.dim(); ++j)
        if (!L(i, j).is_zero()) row.emplace_back(j, L(i, j));
      r.add_row(row);
    }
  }
  return Subspace::span(A.field(), A.dim(), r.kernel());
}

namespace {

Subspace radical_or_graded(const StructureConstAlgebra& A) {
  try {
    return radical(A);
  } catch (const Unsupported&) {
    if (!A.quiver_m()) throw;
    return arrow_ideal(A);
  }
}

}  // namespace

Subspace left_socle(const StructureConstAlgebra& A) { return left_socle(A, radical_or_graded(A)); }

StructureConstAlgebra quotient(const StructureConstAlgebra& A, const Subspace& S) {
  if (!is_two_sided_ideal(A, S)) throw InvalidArgument("quotient by a subspace that is not an ideal");
  RowReducer r(A.field(), A.dim());
  for (const auto& b : S.basis) r.add_row(b);
  std::vector<char> pivot(A.dim(), 0);
  for (auto p : S.pivots) pivot[p] = 1;
  std::vector<std::size_t> keep;
  std::vector<std::size_t> position(A.dim(), 0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    if (pivot[k]) continue;
    position[k] = keep.size();
    keep.push_back(k);
    labels.push_back(A.label(k));
  }
  auto project = [&](const SparseVec& v) {
    SparseVec out;
    for (const auto& [c, x] : r.reduce(v)) out.emplace_back(position[c], x);
    return out;
  };
  std::vector<std::vector<SparseVec>> table(keep.size(), std::vector<SparseVec>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) table[i][j] = project(A.product(keep[i], keep[j]));
  return StructureConstAlgebra(A.field(), std::move(labels), std::move(table), project(A.unit()));
}

StructureConstAlgebra socle_quotient(const StructureConstAlgebra& A) {
  const Subspace soc = left_socle(A);
  if (!is_two_sided_ideal(A, soc)) throw InvalidArgument("left socle is not a two-sided ideal");
  return quotient(A, soc);
}

// ---------------------------------------------------------------------------
// Frobenius

Matrix gram_matrix(const StructureConstAlgebra& A, const DenseVec& functional) {
  Matrix G(A.field(), A.dim(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (const auto& [r, v] : A.product(i, j)) G(i, j) += v * functional[r];
  return G;
}

FrobeniusCertificate is_frobenius(const StructureConstAlgebra& A, std::uint64_t seed) {
  const auto& F = A.field();
  const std::size_t n = A.dim();

  std::optional<Subspace> soc;
  try {
    soc = left_socle(A);
  } catch (const Error&) {
  }
  if (soc) {
    DenseVec lambda(n, F->zero());
    for (auto p : soc->pivots) lambda[p] = F->one();
    if (!gram_matrix(A, lambda).determinant().is_zero())
      return {true, lambda, "socle-dual", std::nullopt};
  }

  std::mt19937_64 rng(seed);
  auto random_witness = [&](int trials) -> std::optional<DenseVec> {
    for (int t = 0; t < trials; ++t) {
      DenseVec lambda;
      for (std::size_t k = 0; k < n; ++k) lambda.push_back(F->random(rng));
      if (!gram_matrix(A, lambda).determinant().is_zero()) return lambda;
    }
    return std::nullopt;
  };

  if (n > 12) {
    if (auto w = random_witness(64)) return {true, *w, "random", std::nullopt};
  }

  std::vector<std::vector<MPoly>> G(n, std::vector<MPoly>(n, MPoly(F, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [r, v] : A.product(i, j))
        G[i][j] = G[i][j] + MPoly::variable(F, n, r).scaled(v);
  const MPoly det = bareiss_determinant(std::move(G));
  if (det.is_zero()) return {false, std::nullopt, "symbolic", det.to_string()};
  FrobeniusCertificate cert{true, std::nullopt, "symbolic", det.to_string()};
  if (auto w = random_witness(64)) cert.functional = *w;
  return cert;
}

// ---------------------------------------------------------------------------
// Rescaling isomorphisms

namespace {

// Exponent of (lambda_0..lambda_{m-1}, mu_0..mu_{m-1}) carried by a label.
std::vector<long long> label_exponent(const std::string& label, int m) {
  std::vector<long long> e(2 * m, 0);
  auto index = [&](std::size_t prefix) {
    int i = std::stoi(label.substr(prefix));
    if (i < 0 || i >= m) throw InvalidArgument("label index out of range: " + label);
    return i;
  };
  if (label.rfind("abar", 0) == 0) {
    e[m + index(4)] = 1;
  } else if (label.rfind("a", 0) == 0) {
    e[index(1)] = 1;
  } else if (label.rfind("s", 0) == 0) {
    int i = index(1);
    e[i] = 1;
    e[m + i] = 1;
  } else if (label.rfind("e", 0) != 0) {
    throw InvalidArgument("label outside the quiver basis: " + label);
  }
  return e;
}

int vertex_count(const StructureConstAlgebra& A) {
  int m = 0;
  for (const auto& l : A.labels())
    if (!l.empty() && l[0] == 'e') ++m;
  if (m == 0) throw InvalidArgument("algebra has no vertex idempotents");
  return m;
}

Scalar label_scale(const std::vector<long long>& e, const RescalingAssignment& r) {
  const int m = static_cast<int>(r.lambda.size());
  Scalar s = r.lambda.front().field()->one();
  for (int i = 0; i < m; ++i) {
    if (e[i]) s *= r.lambda[i].pow(e[i]);
    if (e[m + i]) s *= r.mu[i].pow(e[m + i]);
  }
  return s;
}

Scalar coefficient(const SparseVec& v, std::size_t k, const FieldHandle& F) {
  for (const auto& [c, x] : v)
    if (c == k) return x;
  return F->zero();
}

struct MonomialEquation {
  std::vector<long long> exponent;
  Scalar rhs;
};

std::optional<Scalar> nth_root(const Scalar& value, long long n) {
  if (n < 0) return nth_root(value.inverse(), -n);
  if (n == 1) return value;
  if (value.is_one()) return value.field()->one();
  const auto& F = value.field();
  if (F->size() != 0 && F->size() <= (1u << 16)) {
    for (const Scalar& x : F->elements())
      if (!x.is_zero() && x.pow(n) == value) return x;
  }
  return std::nullopt;
}

}  // namespace

bool is_rescaling_isomorphism(const StructureConstAlgebra& A, const StructureConstAlgebra& B,
                              const RescalingAssignment& r) {
  if (A.labels() != B.labels()) return false;
  const int m = vertex_count(A);
  if (static_cast<int>(r.lambda.size()) != m || static_cast<int>(r.mu.size()) != m) return false;
  for (const auto& x : r.lambda)
    if (x.is_zero()) return false;
  for (const auto& x : r.mu)
    if (x.is_zero()) return false;
  std::vector<Scalar> scale;
  for (const auto& l : A.labels()) scale.push_back(label_scale(label_exponent(l, m), r));
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t y = 0; y < A.dim(); ++y) {
      SparseVec image;
      for (const auto& [k, v] : A.product(x, y)) image.emplace_back(k, v * scale[k]);
      SparseVec expected;
      for (const auto& [k, v] : B.product(x, y)) expected.emplace_back(k, v * scale[x] * scale[y]);
      if (image != expected) return false;
    }
  return true;
}

std::optional<RescalingAssignment> rescaling_isomorphism(const StructureConstAlgebra& A,
                                                         const StructureConstAlgebra& B) {
  if (A.labels() != B.labels()) throw InvalidArgument("basis shapes differ");
  const auto& F = A.field();
  const int m = vertex_count(A);
  const std::size_t nv = 2 * static_cast<std::size_t>(m);

  std::vector<std::vector<long long>> exps;
  for (const auto& l : A.labels()) exps.push_back(label_exponent(l, m));

  // alpha_k scale(b_k) = beta_k scale(x) scale(y)
  std::vector<MonomialEquation> eqs;
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t y = 0; y < A.dim(); ++y)
      for (std::size_t k = 0; k < A.dim(); ++k) {
        Scalar alpha = coefficient(A.product(x, y), k, F);
        Scalar beta = coefficient(B.product(x, y), k, F);
        if (alpha.is_zero() && beta.is_zero()) continue;
        if (alpha.is_zero() || beta.is_zero()) return std::nullopt;
        std::vector<long long> e(nv);
        for (std::size_t v = 0; v < nv; ++v) e[v] = exps[x][v] + exps[y][v] - exps[k][v];
        eqs.push_back({std::move(e), alpha / beta});
      }

  // Integer row reduction; multiplicative right-hand sides follow along.
  auto combine = [](MonomialEquation& target, const MonomialEquation& src, long long q) {
    for (std::size_t v = 0; v < target.exponent.size(); ++v) target.exponent[v] -= q * src.exponent[v];
    target.rhs = target.rhs * src.rhs.pow(-q);
  };
  std::vector<std::pair<std::size_t, MonomialEquation>> pivots;
  std::vector<MonomialEquation> rest = std::move(eqs);
  for (std::size_t col = 0; col < nv; ++col) {
    for (;;) {
      std::size_t best = rest.size();
      for (std::size_t r = 0; r < rest.size(); ++r) {
        if (rest[r].exponent[col] == 0) continue;
        if (best == rest.size() || std::llabs(rest[r].exponent[col]) < std::llabs(rest[best].exponent[col]))
          best = r;
      }
      if (best == rest.size()) break;
      bool others = false;
      for (std::size_t r = 0; r < rest.size(); ++r) {
        if (r == best || rest[r].exponent[col] == 0) continue;
        others = true;
        combine(rest[r], rest[best], rest[r].exponent[col] / rest[best].exponent[col]);
      }
      if (!others) {
        pivots.emplace_back(col, rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
        break;
      }
    }
  }
  for (const auto& eq : rest)
    if (!eq.rhs.is_one()) return std::nullopt;

  std::vector<Scalar> value(nv, F->one());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const auto& [col, eq] = *it;
    Scalar target = eq.rhs;
    for (std::size_t v = col + 1; v < nv; ++v)
      if (eq.exponent[v]) target = target * value[v].pow(-eq.exponent[v]);
    auto root = nth_root(target, eq.exponent[col]);
    if (!root) return std::nullopt;
    value[col] = *root;
  }
  RescalingAssignment r;
  r.lambda.assign(value.begin(), value.begin() + m);
  r.mu.assign(value.begin() + m, value.end());
  if (!is_rescaling_isomorphism(A, B, r)) return std::nullopt;
  return r;
}

// ---------------------------------------------------------------------------
// Modules A x

Subspace left_ideal(const StructureConstAlgebra& A, const SparseVec& x) {
  std::vector<SparseVec> gens;
  for (std::size_t k = 0; k < A.dim(); ++k) gens.push_back(A.multiply(A.basis_vector(k), x));
  return Subspace::span(A.field(), A.dim(), gens);
}

std::vector<std::size_t> vertex_dimension_vector(const StructureConstAlgebra& A, const Subspace& M) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    const auto& l = A.label(k);
    if (l.empty() || l[0] != 'e') continue;
    std::vector<SparseVec> images;
    for (const auto& v : M.basis) images.push_back(A.multiply(A.basis_vector(k), v));
    dims.push_back(Subspace::span(A.field(), A.dim(), images).dim());
  }
  return dims;
}

bool two_dim_simple_check(const StructureConstAlgebra& A, int i) {
  const auto& F = A.field();
  auto ai = A.index_of("a" + std::to_string(i));
  if (!ai) throw InvalidArgument("no basis element a" + std::to_string(i));
  const Subspace M = left_ideal(A, A.basis_vector(*ai));
  if (M.dim() == 1) return false;
  if (M.dim() != 2)
    throw NotApplicable("A a" + std::to_string(i) + " has dimension " + std::to_string(M.dim()));

  // Coordinates in the echelon basis are the entries at the pivot columns.
  auto coords = [&](const SparseVec& v) {
    return std::array<Scalar, 2>{coefficient(v, M.pivots[0], F), coefficient(v, M.pivots[1], F)};
  };
  // 2x2 matrices flattened row-major.
  std::vector<SparseVec> actions;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    DenseVec mat(4, F->zero());
    for (int col = 0; col < 2; ++col) {
      auto c = coords(A.multiply(A.basis_vector(k), M.basis[col]));
      mat[col] = c[0];
      mat[2 + col] = c[1];
    }
    actions.push_back(to_sparse(mat));
  }
  auto mat_mul = [&](const SparseVec& x, const SparseVec& y) {
    DenseVec a = to_dense(F, x, 4), b = to_dense(F, y, 4), c(4, F->zero());
    for (int r = 0; r < 2; ++r)
      for (int s = 0; s < 2; ++s) c[2 * r + s] = a[2 * r] * b[s] + a[2 * r + 1] * b[2 + s];
    return to_sparse(c);
  };

  // The subalgebra of M_2(K) generated by the action. It is M_2(K) (dim 4)
  // exactly when the module is absolutely simple; dim 3 is a triangular
  // algebra with an invariant line; dim 2 is K[X] for a non-scalar X and is
  // simple iff the characteristic polynomial of X has no root in K.
  RowReducer span(F, 4);
  span.add_row({{0, F->one()}, {3, F->one()}});
  for (const auto& a : actions) span.add_row(a);
  for (bool grew = true; grew && span.rank() < 4;) {
    grew = false;
    const auto basis = span.rref_rows();
    for (const auto& x : basis)
      for (const auto& y : basis)
        if (span.add_row(mat_mul(x, y))) grew = true;
  }
  if (span.rank() == 4) return true;
  if (span.rank() != 2) return false;
  for (const auto& a : actions) {
    DenseVec X = to_dense(F, a, 4);
    if (X[1].is_zero() && X[2].is_zero() && X[0] == X[3]) continue;
    Scalar trace = X[0] + X[3];
    Scalar det = X[0] * X[3] - X[1] * X[2];
    return !F->quadratic_has_root(-trace, det);
  }
  return false;
}

}  // namespace kq
