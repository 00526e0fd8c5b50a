#include "koszulq/mpoly.hpp"

namespace kq {

MPoly MPoly::constant(FieldHandle field, std::size_t nvars, const Scalar& c) {
  MPoly p(std::move(field), nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(FieldHandle field, std::size_t nvars, std::size_t index) {
  MPoly p(field, nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, field->one());
  return p;
}

void MPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

unsigned MPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, _] : terms_) {
    unsigned d = 0;
    for (auto k : e) d += k;
    best = std::max(best, d);
  }
  return best;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly out(field_, nvars_);
  Exponent e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t k = 0; k < nvars_; ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      out.add_term(e, ca * cb);
    }
  return out;
}

MPoly MPoly::scaled(const Scalar& c) const {
  MPoly out(field_, nvars_);
  for (const auto& [e, x] : terms_) out.add_term(e, c * x);
  return out;
}

MPoly MPoly::exact_div(const MPoly& o) const {
  if (o.is_zero()) throw Error("polynomial division by zero");
  MPoly quotient(field_, nvars_);
  MPoly rest = *this;
  const auto& [lead_e, lead_c] = *o.terms_.begin();
  const Scalar lead_inv = lead_c.inverse();
  Exponent shift(nvars_);
  while (!rest.is_zero()) {
    const auto& [re, rc] = *rest.terms_.begin();
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (re[k] < lead_e[k]) throw Error("inexact polynomial division");
      shift[k] = static_cast<std::uint16_t>(re[k] - lead_e[k]);
    }
    MPoly term(field_, nvars_);
    term.add_term(shift, rc * lead_inv);
    quotient.add_term(shift, rc * lead_inv);
    rest = rest - term * o;
  }
  return quotient;
}

Scalar MPoly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total = field_->zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      if (e[k]) t *= point.at(k).pow(e[k]);
    total += t;
  }
  return total;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (!e[k]) continue;
      out += "*v" + std::to_string(k);
      if (e[k] > 1) out += "^" + std::to_string(e[k]);
    }
  }
  return out;
}

MPoly bareiss_determinant(std::vector<std::vector<MPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("determinant of an empty matrix");
  const FieldHandle field = a[0][0].field();
  const std::size_t nvars = a[0][0].nvars();
  bool negate = false;
  MPoly previous = MPoly::constant(field, nvars, field->one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return MPoly(field, nvars);
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(previous);
    previous = a[k][k];
  }
  MPoly det = a[n - 1][n - 1];
  return negate ? det.scaled(-field->one()) : det;
}

}  // namespace kq
