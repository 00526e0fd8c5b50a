#pragma once

// The presentation Z_gr(E(Lambda_q)) = K[x, y, w] / <w^p - eps x y>: case
// split, explicit generators and eps, and the checks that the centre solver
// agrees with it.

#include <optional>
#include <string>
#include <vector>

#include "koszulq/centre.hpp"

namespace kq {

enum class CaseTag { not_root_of_unity, even_or_char2, odd_d_0mod4, odd_d_2mod4, odd_d_odd };

std::string case_name(CaseTag tag);
std::optional<CaseTag> parse_case(const std::string& name);

CaseTag classify_case(int m, std::uint64_t characteristic, const Order& d);
CaseTag classify_case(const QParams& params);

struct CentralGenerators {
  ExtElement x, y, w;
  long long Lx = 0, Ly = 0, Lw = 0;
  /// sigma * d, always an integer (d, d/2 or 2d)
  long long sigma_d = 0;
  unsigned p = 0;
  /// The printed branch formula.
  Scalar epsilon;
  /// eps from iterating z_j w = c_j z_{j+1}; see epsilon_from_recursion.
  Scalar epsilon_derived;
  CaseTag tag = CaseTag::even_or_char2;
};

/// x = sum gamma_i^{Lx}, y = sum delta_i^{Ly} and
/// w = sum_i (-1)^{i sigma d} prod_{k=1}^{i} (q_k ... q_{k+sigma d-1})^{-1} gamma_i^{sigma d} delta_i^{sigma d}.
/// Throws NotApplicable when zeta is not a root of unity.
CentralGenerators build_generators(const QParamsHandle& params);

/// The printed eps for the branch; sign (-1)^{md/2} in the first branch
/// (1 in characteristic 2). Throws NotApplicable for d infinite.
Scalar epsilon(const QParams& params, CaseTag tag);

/// prod_{l=1}^{p-1} (-1)^{l (sigma d)^2} prod_{k=1}^{l sigma d} (q_k ... q_{k+sigma d-1})^{-1},
/// the scalar obtained by multiplying w into z_j = sum_i c_i gamma_i^{j sigma d} delta_i^{j sigma d}
/// one factor at a time. Agrees with epsilon() except in the odd_d_2mod4
/// branch with m >= 3, where the printed formula uses windows of length d.
Scalar epsilon_from_recursion(const QParams& params, CaseTag tag);

struct RelationCheck {
  bool holds = false;
  /// w^p - eps x y; zero when the relation holds.
  ExtElement difference;
};
RelationCheck verify_relation(const CentralGenerators& gens);
/// Same with an explicit scalar in place of gens.epsilon.
RelationCheck verify_relation(const CentralGenerators& gens, const Scalar& eps);

/// "w^2 = -x*y" style rendering of the relation.
std::string relation_string(unsigned p, const Scalar& eps);

struct PresentedRing {
  long long Lx = 0, Ly = 0, Lw = 0;
  unsigned p = 0;
  Scalar epsilon;
};
PresentedRing presented_ring(const CentralGenerators& gens);

/// Coefficients of (1 - t^{p Lw}) / ((1 - t^Lx)(1 - t^Ly)(1 - t^Lw)) up to t^N.
std::vector<long long> hilbert_coefficients(const PresentedRing& ring, long long N);

/// Pole order at t = 1 of the Hilbert series; 0 for the trivial centre K
/// (nullopt ring).
unsigned krull_dimension(const std::optional<PresentedRing>& ring);

/// lcm(Lx, Ly, Lw): the quasi-period of the Hilbert function.
long long hilbert_period(const PresentedRing& ring);

/// Whether n -> sum_{k <= n} dims[k] agrees with a quadratic polynomial on
/// each residue class mod `period`. Classes with fewer than four samples
/// cannot be tested; `tested` reports how many classes were.
struct QuadraticFit {
  bool fits = false;
  std::size_t tested = 0;
};
QuadraticFit partial_sums_quadratic(const std::vector<std::size_t>& dims, long long period);

long long default_degree_bound(const QParams& params);

struct StructureReport {
  CaseTag tag = CaseTag::not_root_of_unity;
  long long N = 0;
  std::optional<CentralGenerators> generators;
  bool x_central = false, y_central = false, w_central = false;
  /// w^p = eps x y with the printed eps (part of the verdict).
  std::optional<RelationCheck> relation;
  /// Same with epsilon_derived (reported only).
  std::optional<RelationCheck> derived_relation;
  std::vector<std::size_t> solver_dims;
  std::vector<long long> hilbert_dims;
  bool dims_match = false;
  std::optional<long long> first_failing_degree;
  bool pass = false;
};

/// Generators central (is_central up to `central_bound`), relation exact, and
/// centre dimensions equal to the Hilbert coefficients for every n <= N; for
/// d infinite, dims must be [1, 0, ..., 0].
StructureReport verify_structure_theorem(const QParamsHandle& params, long long N,
                                         CentreBasis* cache = nullptr, long long central_bound = 5);

struct FiniteGenerationResult {
  bool finitely_generated = false;
  std::size_t monomials_checked = 0;
  std::string detail;
};

/// Every monomial (i, s, t) with s + t <= N and max(s, t) > Lx equals a
/// nonzero multiple of x^a y^b g with g a monomial of exponents <= Lx, found
/// by subtracting (Lx, 0) and (0, Lx). False for d infinite.
FiniteGenerationResult verify_finite_generation(const QParamsHandle& params, long long N);

struct PresentationRecord {
  /// "K" or "K[x,y,w]/<w^p - eps*x*y>" (signs folded).
  std::string presentation;
  std::optional<long long> Lx, Ly, Lw;
  std::optional<unsigned> p;
  /// epsilon_derived, the scalar the relation satisfies.
  std::optional<std::string> epsilon;
  unsigned krull_dimension = 0;
  /// The identification HH*/N = Z_gr(E) is imported, not derived.
  std::string note;
};
PresentationRecord hh_mod_nil_report(const QParamsHandle& params);

}  // namespace kq
