#include "koszulq/qparams.hpp"

namespace kq {

std::shared_ptr<const QParams> QParams::make(FieldHandle field, std::vector<Scalar> q) {
  if (q.empty()) throw InvalidArgument("q must have at least one entry");
  std::shared_ptr<QParams> out(new QParams());
  out->field_ = std::move(field);
  out->zeta_ = out->field_->one();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].field() != out->field_) throw InvalidArgument("q entry from a different field");
    if (q[i].is_zero()) throw InvalidArgument("q_" + std::to_string(i) + " must be nonzero");
    out->q_inv_.push_back(q[i].inverse());
    out->zeta_ *= q[i];
  }
  out->q_ = std::move(q);
  out->d_ = unity_order(out->zeta_);
  return out;
}

Scalar QParams::q_interval_product(long long k, long long len) const {
  // Every full turn around the cycle contributes zeta.
  const long long m = static_cast<long long>(q_.size());
  Scalar p = zeta_.pow(len / m);
  for (long long j = 0; j < len % m; ++j) p *= q_at(k + j);
  return p;
}

}  // namespace kq
