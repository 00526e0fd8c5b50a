#pragma once

// Graded centre of E(Lambda_q), degree by degree, as the exact nullspace of
// the commutation constraints.
//
// E is generated by the idempotents and the 2m arrows, and the sign rule
// z g = (-1)^{|z||g|} g z is multiplicative in g, so a homogeneous z is
// graded-central as soon as it commutes with every e_i and graded-commutes
// with every arrow. solve_degree imposes exactly those constraints;
// is_central checks against all monomials up to a length bound instead.

#include <map>
#include <optional>
#include <vector>

#include "koszulq/ext.hpp"

namespace kq {

/// Echelonized basis of Z_gr^n.
std::vector<ExtElement> solve_degree(const QParamsHandle& params, long long n);

/// z g = (-1)^{n l(g)} g z for every monomial g with l(g) <= L. Throws
/// InvalidArgument for non-homogeneous z (zero is central).
bool is_central(const ExtElement& z, long long L);

struct CentreBasis {
  std::map<long long, std::vector<ExtElement>> by_degree;
};

/// Worker count from KQ_WORKERS (default 1, clamped to [1, 64]).
unsigned configured_workers();

/// [dim Z^0, ..., dim Z^N]. Degrees are solved on `workers` threads
/// (0 = configured_workers()); bases land in `cache` when given.
std::vector<std::size_t> centre_dims(const QParamsHandle& params, long long N,
                                     CentreBasis* cache = nullptr, unsigned workers = 0);

/// z = sum_j c_j gamma_j^{s0} delta_j^{t0}.
struct CentralMonomialShape {
  long long s0 = 0, t0 = 0;
  std::vector<Scalar> coefficients;
};

/// The shape of z when its support is {(j, s0, t0)} with origin = terminus;
/// nullopt otherwise.
std::optional<CentralMonomialShape> central_shape(const ExtElement& z);
/// c_{j+1} = (-1)^{s0} c_j (q_{j+1} ... q_{j+t0})^{-1}
///         = (-1)^{t0} c_j (q_{j+1} ... q_{j+s0})^{-1} for all j.
bool shape_recurrences_hold(const QParams& params, const CentralMonomialShape& shape);
/// zeta^{t0} = (-1)^{m s0}, zeta^{s0} = (-1)^{m t0}, s0 = t0 (mod m).
bool shape_sign_conditions_hold(const QParams& params, const CentralMonomialShape& shape);

}  // namespace kq
