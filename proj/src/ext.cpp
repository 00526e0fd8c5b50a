#include "koszulq/ext.hpp"

#include <algorithm>

namespace kq {

std::string ExtMonomial::to_string(int m) const {
  return "g[" + std::to_string(i) + "]^" + std::to_string(s) + " d[" +
         std::to_string(terminus(m)) + "]^" + std::to_string(t);
}

ExtMonomial idempotent(int i) { return {i, 0, 0}; }
ExtMonomial arrow_a(int i) { return {i, 1, 0}; }
ExtMonomial arrow_abar(int i, int m) { return {(i + 1) % m, 0, 1}; }

std::optional<std::pair<Scalar, ExtMonomial>> mon_mul(const QParams& params, const ExtMonomial& x,
                                                      const ExtMonomial& y) {
  const int m = params.m();
  const int j = x.terminus(m);
  if (j != y.i) return std::nullopt;
  // (gamma^s delta_j^t) a_j = (-1)^t (q_{j+1} ... q_{j+t})^{-1} gamma^{s+1} delta_{j+1}^t,
  // applied once for each of the y.s arrows of y.
  Scalar denom = params.field()->one();
  if (x.t > 0)
    for (long long r = 0; r < y.s; ++r) denom *= params.q_interval_product(j + r + 1, x.t);
  Scalar c = sign_power(params.field(), x.t * y.s) * denom.inverse();
  return std::make_pair(std::move(c), ExtMonomial{x.i, x.s + y.s, x.t + y.t});
}

std::vector<ExtMonomial> grade_basis(const QParams& params, long long n) {
  if (n < 0) throw InvalidArgument("grade must be nonnegative");
  std::vector<ExtMonomial> out;
  for (long long t = 0; t <= n; ++t)
    for (int i = 0; i < params.m(); ++i) out.push_back({i, n - t, t});
  return out;
}

std::size_t grade_index(const QParams& params, const ExtMonomial& x) {
  return static_cast<std::size_t>(x.t) * params.m() + x.i;
}

// ---------------------------------------------------------------------------

ExtElement ExtElement::monomial(QParamsHandle params, const ExtMonomial& x) {
  Scalar one = params->field()->one();
  return monomial(std::move(params), x, one);
}

ExtElement ExtElement::monomial(QParamsHandle params, const ExtMonomial& x, const Scalar& c) {
  ExtElement z(std::move(params));
  z.add_term(x, c);
  return z;
}

ExtElement ExtElement::unit(QParamsHandle params) {
  ExtElement z(params);
  for (int i = 0; i < params->m(); ++i) z.add_term(idempotent(i), params->field()->one());
  return z;
}

Scalar ExtElement::coefficient(const ExtMonomial& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? params_->field()->zero() : it->second;
}

std::optional<long long> ExtElement::length() const {
  if (terms_.empty()) return std::nullopt;
  const long long n = terms_.begin()->first.length();
  for (const auto& [x, _] : terms_)
    if (x.length() != n) return std::nullopt;
  return n;
}

std::optional<long long> ExtElement::zdeg() const {
  if (terms_.empty()) return std::nullopt;
  const long long n = terms_.begin()->first.zdeg();
  for (const auto& [x, _] : terms_)
    if (x.zdeg() != n) return std::nullopt;
  return n;
}

void ExtElement::add_term(const ExtMonomial& x, const Scalar& c) {
  if (x.i < 0 || x.i >= params_->m() || x.s < 0 || x.t < 0)
    throw InvalidArgument("monomial out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void ExtElement::check_same(const ExtElement& o) const {
  if (params_ != o.params_) throw InvalidArgument("ext elements over different q-parameters");
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  check_same(o);
  ExtElement out = *this;
  for (const auto& [x, c] : o.terms_) out.add_term(x, c);
  return out;
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  check_same(o);
  ExtElement out = *this;
  for (const auto& [x, c] : o.terms_) out.add_term(x, -c);
  return out;
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
  check_same(o);
  ExtElement out(params_);
  for (const auto& [x, a] : terms_)
    for (const auto& [y, b] : o.terms_)
      if (auto p = mon_mul(*params_, x, y)) out.add_term(p->second, a * b * p->first);
  return out;
}

ExtElement ExtElement::scaled(const Scalar& c) const {
  ExtElement out(params_);
  for (const auto& [x, a] : terms_) out.add_term(x, c * a);
  return out;
}

ExtElement ExtElement::power(unsigned k) const {
  ExtElement out = unit(params_);
  for (unsigned r = 0; r < k; ++r) out = out * *this;
  return out;
}

bool ExtElement::operator==(const ExtElement& o) const {
  return params_ == o.params_ && terms_ == o.terms_;
}

std::string ExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : terms_) {
    std::string coeff = c.short_string();
    bool negative = false;
    // Strip a leading minus from a single-term coefficient for a signed sum.
    if (coeff.size() > 1 && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos) {
      negative = true;
      coeff.erase(0, 1);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (coeff != "1") {
      const bool compound = coeff.find_first_of("+-") != std::string::npos;
      out += compound ? "(" + coeff + ")*" : coeff + "*";
    }
    out += x.to_string(params_->m());
  }
  return out;
}

SparseVec to_grade_vector(const ExtElement& z, long long n) {
  SparseVec v;
  for (const auto& [x, c] : z.terms()) {
    if (x.length() != n) throw InvalidArgument("element is not homogeneous of the requested length");
    v.emplace_back(grade_index(*z.params(), x), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

ExtElement from_grade_vector(const QParamsHandle& params, long long n, const SparseVec& v) {
  ExtElement z(params);
  const long long m = params->m();
  for (const auto& [k, c] : v) {
    const long long t = static_cast<long long>(k) / m;
    if (t > n) throw InvalidArgument("coordinate beyond the grade basis");
    z.add_term({static_cast<int>(k % m), n - t, t}, c);
  }
  return z;
}

std::vector<SparseVec> mult_matrix(const QParams& params, const ExtMonomial& g, Side side,
                                   long long n) {
  if (g.length() != 1) throw InvalidArgument("mult_matrix needs an arrow");
  std::vector<SparseVec> cols;
  for (const auto& x : grade_basis(params, n)) {
    auto p = side == Side::left ? mon_mul(params, g, x) : mon_mul(params, x, g);
    SparseVec col;
    if (p) col.emplace_back(grade_index(params, p->second), p->first);
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace kq
