#pragma once

// Finite-dimensional algebras given by structure constants, the quiver
// algebras Lambda_q and their deformations K Q / J_eta, and the radical,
// socle, Frobenius and isomorphism computations on them.

#include <optional>
#include <string>
#include <vector>

#include "koszulq/linalg.hpp"
#include "koszulq/mpoly.hpp"
#include "koszulq/qparams.hpp"

namespace kq {

/// Finite-dimensional associative unital algebra: labelled basis and the
/// product of every ordered pair of basis elements. Associativity and the
/// unit are certified exhaustively at construction.
class StructureConstAlgebra {
 public:
  /// Throws NonAssociative (with the offending triple) or InvalidArgument.
  StructureConstAlgebra(FieldHandle field, std::vector<std::string> labels,
                        std::vector<std::vector<SparseVec>> table, SparseVec unit,
                        std::optional<int> quiver_m = std::nullopt);

  const FieldHandle& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t k) const { return labels_.at(k); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const SparseVec& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const SparseVec& unit() const { return unit_; }
  const std::vector<std::vector<SparseVec>>& table() const { return table_; }

  /// Number of vertices when the basis is the labelled quiver basis
  /// e_i, a_i, abar_i, s_i (in that block order); nullopt otherwise.
  std::optional<int> quiver_m() const { return quiver_m_; }

  SparseVec multiply(const SparseVec& x, const SparseVec& y) const;
  SparseVec basis_vector(std::size_t k) const { return {{k, field_->one()}}; }
  /// Matrix of v -> x v in basis coordinates (column k = x * b_k).
  Matrix left_mult_matrix(const SparseVec& x) const;

  bool operator==(const StructureConstAlgebra& o) const {
    return labels_ == o.labels_ && table_ == o.table_;
  }

 private:
  FieldHandle field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<SparseVec>> table_;
  SparseVec unit_;
  std::optional<int> quiver_m_;
};

/// Basis positions in the quiver-shaped algebras.
struct QuiverBasis {
  int m;
  std::size_t e(long long i) const { return wrap(i); }
  std::size_t a(long long i) const { return m + wrap(i); }
  std::size_t abar(long long i) const { return 2 * m + wrap(i); }
  std::size_t s(long long i) const { return 3 * m + wrap(i); }
  std::size_t wrap(long long i) const { return static_cast<std::size_t>(((i % m) + m) % m); }
};

/// A subspace of an algebra, stored as its reduced row echelon basis.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<SparseVec> basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.size(); }
  static Subspace span(const FieldHandle& field, std::size_t ambient_dim,
                       const std::vector<SparseVec>& vectors);
  bool contains(const FieldHandle& field, const SparseVec& v) const;
  bool operator==(const Subspace& o) const {
    return ambient_dim == o.ambient_dim && basis == o.basis;
  }
};

struct DeformationParams {
  Scalar t, b1, b2;
};

/// Lambda_q: a_i abar_i = s_i, abar_{i-1} a_{i-1} = q_i s_i, all other
/// length-two products zero. Dimension 4m.
StructureConstAlgebra build_lambda_q(const QParams& params);

/// K Q / J_eta with eta = b1 pi + b2 chi specialised at t. Structure constants
/// come from orienting abar_{j-1} a_{j-1} -> rhs and reducing every product of
/// basis paths; the table is then certified associative (NonAssociative is
/// thrown when the oriented system is not confluent, which happens e.g. for
/// m odd with b2 != 0 in characteristic != 2).
StructureConstAlgebra build_deformed(const FieldHandle& field, int m, const DeformationParams& dp);

/// K^n with orthogonal idempotent basis; K itself for n = 1.
StructureConstAlgebra product_of_fields(const FieldHandle& field, std::size_t n);

/// Jacobson radical as the kernel of (x, y) -> tr(L_{xy}). Throws Unsupported
/// when 0 < char K <= dim A.
Subspace radical(const StructureConstAlgebra& A);
/// Span of the arrow and length-two basis elements of a quiver-shaped
/// algebra, certified to be a nilpotent two-sided ideal (the radical of the
/// graded families). Throws NotApplicable otherwise.
Subspace arrow_ideal(const StructureConstAlgebra& A);

bool is_two_sided_ideal(const StructureConstAlgebra& A, const Subspace& S);
/// Least k <= dim A + 1 with S^k = 0, or nullopt when S is not nilpotent.
std::optional<std::size_t> nilpotency_index(const StructureConstAlgebra& A, const Subspace& S);

/// {x : r x = 0 for all r in rad}.
Subspace left_socle(const StructureConstAlgebra& A, const Subspace& rad);
Subspace left_socle(const StructureConstAlgebra& A);

/// A / S for a two-sided ideal S, on the basis elements at the non-pivot
/// positions of S. Throws InvalidArgument when S is not a two-sided ideal.
StructureConstAlgebra quotient(const StructureConstAlgebra& A, const Subspace& S);
/// A / soc(A); uses the arrow ideal as radical when the trace form does not
/// apply and the algebra is graded.
StructureConstAlgebra socle_quotient(const StructureConstAlgebra& A);

struct FrobeniusCertificate {
  bool frobenius = false;
  /// Coordinates of lambda on the basis when a witness was found.
  std::optional<DenseVec> functional;
  /// "socle-dual", "random", "symbolic".
  std::string method;
  /// det G(lambda) as a polynomial in the functional's coordinates, when the
  /// symbolic path ran.
  std::optional<std::string> determinant;
};

/// Frobenius test by a nondegenerate functional. The socle-dual functional is
/// tried first; otherwise det G(lambda) is decided exactly by Bareiss
/// elimination when dim A <= 12, and by random evaluation above that (any
/// nonsingular evaluation is itself a witness, and a negative answer is always
/// confirmed symbolically).
FrobeniusCertificate is_frobenius(const StructureConstAlgebra& A, std::uint64_t seed = 1);
/// Gram matrix G_{b,b'} = lambda(b b').
Matrix gram_matrix(const StructureConstAlgebra& A, const DenseVec& functional);

/// Scalars for e_i -> e_i, a_i -> lambda_i a_i, abar_i -> mu_i abar_i,
/// s_i -> lambda_i mu_i s_i.
struct RescalingAssignment {
  std::vector<Scalar> lambda, mu;
};

/// Whether the assignment defines an algebra isomorphism A -> B.
bool is_rescaling_isomorphism(const StructureConstAlgebra& A, const StructureConstAlgebra& B,
                              const RescalingAssignment& r);
/// Solves the multiplicative constraint system the two tables impose on
/// (lambda, mu). Throws InvalidArgument when the basis shapes differ.
std::optional<RescalingAssignment> rescaling_isomorphism(const StructureConstAlgebra& A,
                                                         const StructureConstAlgebra& B);

/// A x.
Subspace left_ideal(const StructureConstAlgebra& A, const SparseVec& x);
/// dim e_k M for each vertex k (quiver-shaped algebras, M a left module
/// inside A).
std::vector<std::size_t> vertex_dimension_vector(const StructureConstAlgebra& A, const Subspace& M);

/// Whether A a_i is a 2-dimensional simple module. A 1-dimensional A a_i
/// gives false; any other dimension throws NotApplicable.
bool two_dim_simple_check(const StructureConstAlgebra& A, int i);

}  // namespace kq
