#pragma once

// Sparse multivariate polynomials over a Field, enough to run fraction-free
// (Bareiss) elimination on matrices of linear forms.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "koszulq/field.hpp"

namespace kq {

class MPoly {
 public:
  using Exponent = std::vector<std::uint16_t>;

  MPoly(FieldHandle field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static MPoly constant(FieldHandle field, std::size_t nvars, const Scalar& c);
  static MPoly variable(FieldHandle field, std::size_t nvars, std::size_t index);

  const FieldHandle& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nvars() const { return nvars_; }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly scaled(const Scalar& c) const;
  /// Exact quotient; throws Error if `o` does not divide `*this`.
  MPoly exact_div(const MPoly& o) const;

  Scalar evaluate(const std::vector<Scalar>& point) const;
  std::string to_string() const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

 private:
  void add_term(const Exponent& e, const Scalar& c);

  FieldHandle field_;
  std::size_t nvars_;
  // Lex order, largest first, so begin() is the leading term.
  std::map<Exponent, Scalar, std::greater<Exponent>> terms_;
};

/// Determinant by Bareiss fraction-free elimination with row pivoting.
MPoly bareiss_determinant(std::vector<std::vector<MPoly>> matrix);

}  // namespace kq
