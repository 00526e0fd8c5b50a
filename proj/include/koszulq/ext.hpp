#pragma once

// The Koszul dual E(Lambda_q) = K Q / <q_i^{-1} a_i abar_i + abar_{i-1} a_{i-1}>.
// Every path reduces to a multiple of a single normal-form monomial
// gamma_i^s delta_j^t (all a's before all abar's), so elements are finitely
// supported maps from monomials to scalars.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszulq/linalg.hpp"
#include "koszulq/qparams.hpp"

namespace kq {

/// gamma_i^s delta_j^t with j = i + s - t (mod m).
struct ExtMonomial {
  int i = 0;
  long long s = 0;
  long long t = 0;

  long long length() const { return s + t; }
  long long zdeg() const { return s - t; }
  int terminus(int m) const { return static_cast<int>((((i + s - t) % m) + m) % m); }

  /// Deterministic order: by length, then z-degree descending, then origin.
  friend std::strong_ordering operator<=>(const ExtMonomial& a, const ExtMonomial& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    if (auto c = b.zdeg() <=> a.zdeg(); c != 0) return c;
    return a.i <=> b.i;
  }
  friend bool operator==(const ExtMonomial&, const ExtMonomial&) = default;

  /// "g[i]^s d[j]^t"
  std::string to_string(int m) const;
};

ExtMonomial idempotent(int i);
ExtMonomial arrow_a(int i);
/// abar_i : i+1 -> i, i.e. delta of length one starting at i+1.
ExtMonomial arrow_abar(int i, int m);

/// Product of two monomials: nullopt on vertex mismatch, otherwise the
/// scalar and the normal form. The scalar comes from pushing each a of the
/// right factor left through the delta part of the left factor, one
/// abar_k a_k -> -q_{k+1}^{-1} a_{k+1} abar_{k+1} step at a time.
std::optional<std::pair<Scalar, ExtMonomial>> mon_mul(const QParams& params, const ExtMonomial& x,
                                                      const ExtMonomial& y);

/// All monomials of length n, ordered by z-degree descending then origin;
/// m(n+1) of them. The position of (i, s, t) is t*m + i.
std::vector<ExtMonomial> grade_basis(const QParams& params, long long n);
std::size_t grade_index(const QParams& params, const ExtMonomial& x);

class ExtElement {
 public:
  using Terms = std::map<ExtMonomial, Scalar>;

  explicit ExtElement(QParamsHandle params) : params_(std::move(params)) {}
  static ExtElement monomial(QParamsHandle params, const ExtMonomial& x);
  static ExtElement monomial(QParamsHandle params, const ExtMonomial& x, const Scalar& c);
  /// sum of the e_i
  static ExtElement unit(QParamsHandle params);

  const QParamsHandle& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x (zero when absent).
  Scalar coefficient(const ExtMonomial& x) const;

  /// Common length of the support, if homogeneous (nullopt for zero).
  std::optional<long long> length() const;
  std::optional<long long> zdeg() const;

  void add_term(const ExtMonomial& x, const Scalar& c);

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement scaled(const Scalar& c) const;
  ExtElement power(unsigned k) const;

  bool operator==(const ExtElement& o) const;

  /// Signed sum such as "g[0]^1 d[0]^1 - g[1]^1 d[1]^1"; "0" when zero.
  std::string to_string() const;

 private:
  void check_same(const ExtElement& o) const;

  QParamsHandle params_;
  Terms terms_;
};

/// Coordinates of a homogeneous element of length n in grade_basis(n).
SparseVec to_grade_vector(const ExtElement& z, long long n);
ExtElement from_grade_vector(const QParamsHandle& params, long long n, const SparseVec& v);

enum class Side { left, right };

/// Matrix (as columns) of z -> g z (left) or z -> z g (right) from grade n to
/// grade n + 1. Column k is the image of grade_basis(n)[k]; each column has
/// at most one entry. Throws InvalidArgument when g has length != 1.
std::vector<SparseVec> mult_matrix(const QParams& params, const ExtMonomial& g, Side side,
                                   long long n);

}  // namespace kq
