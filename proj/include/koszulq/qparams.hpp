#pragma once

#include <memory>
#include <vector>

#include "koszulq/field.hpp"

namespace kq {

/// The deformation tuple q = (q_0, ..., q_{m-1}) in (K*)^m together with
/// zeta = q_0 ... q_{m-1} and its multiplicative order d.
class QParams {
 public:
  /// Throws InvalidArgument when q is empty or some q_i is zero.
  static std::shared_ptr<const QParams> make(FieldHandle field, std::vector<Scalar> q);

  int m() const { return static_cast<int>(q_.size()); }
  const FieldHandle& field() const { return field_; }
  const std::vector<Scalar>& q() const { return q_; }
  /// q_{k mod m}; any integer k.
  const Scalar& q_at(long long k) const { return q_[index(k)]; }
  const Scalar& q_inv_at(long long k) const { return q_inv_[index(k)]; }
  const Scalar& zeta() const { return zeta_; }
  const Order& d() const { return d_; }

  /// prod_{j=0}^{len-1} q_{(k+j) mod m}; the empty product is 1.
  Scalar q_interval_product(long long k, long long len) const;

  std::size_t index(long long k) const {
    const long long m = static_cast<long long>(q_.size());
    return static_cast<std::size_t>(((k % m) + m) % m);
  }

 private:
  QParams() = default;
  FieldHandle field_;
  std::vector<Scalar> q_;
  std::vector<Scalar> q_inv_;
  Scalar zeta_;
  Order d_;
};

using QParamsHandle = std::shared_ptr<const QParams>;

}  // namespace kq
