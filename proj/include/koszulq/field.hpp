#pragma once

// Exact coefficient fields. Four families share one runtime abstraction so
// that every downstream module is field-generic:
//
//   rationals            Q
//   cyclotomic(D)        Q(z) with z a primitive D-th root of unity,
//                        elements reduced modulo Phi_D
//   rational_function    Q(u), reduced fractions with monic denominator
//   finite(p[, f])       F_p, or F_p[x]/(f) for an irreducible modulus f
//
// A Scalar keeps a handle to its field; scalars from different fields never
// mix.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "koszulq/error.hpp"
#include "koszulq/poly.hpp"

namespace kq {

enum class FieldKind { rationals, cyclotomic, rational_function, finite };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  unsigned D = 1;                        // cyclotomic
  std::uint64_t p = 0;                   // finite
  std::vector<std::uint64_t> modulus;    // finite extension, low degree first

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(unsigned D) { return {FieldKind::cyclotomic, D, 0, {}}; }
  static FieldSpec rational_function() { return {FieldKind::rational_function, 1, 0, {}}; }
  static FieldSpec finite(std::uint64_t p, std::vector<std::uint64_t> modulus = {}) {
    return {FieldKind::finite, 1, p, std::move(modulus)};
  }
};

using QPoly = poly::Poly<poly::RationalRing>;
using FpPoly = poly::Poly<poly::PrimeRing>;

struct RatFunc {
  QPoly num;
  QPoly den;  // monic, coprime to num
  friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

/// Representation of a field element; which alternative is live depends on
/// the owning field (QPoly for rationals/cyclotomic, RatFunc, FpPoly).
using ScalarRepr = std::variant<QPoly, RatFunc, FpPoly>;

class Field;
using FieldHandle = std::shared_ptr<const Field>;

/// Multiplicative order; nullopt stands for infinity.
using Order = std::optional<std::uint64_t>;

class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldHandle field, ScalarRepr repr) : field_(std::move(field)), repr_(std::move(repr)) {}

  const FieldHandle& field() const { return field_; }
  const ScalarRepr& repr() const { return repr_; }
  bool valid() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Throws InvalidArgument on zero.
  Scalar inverse() const;
  /// Negative exponents invert.
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;
  /// to_string() without the " mod ..." field suffix.
  std::string short_string() const;

 private:
  FieldHandle field_;
  ScalarRepr repr_;
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  virtual ~Field() = default;

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }

  virtual std::uint64_t characteristic() const = 0;
  /// Every root of unity in the field has order dividing this bound.
  virtual std::uint64_t torsion_bound() const = 0;
  /// Dimension over the prime field (over Q for characteristic 0); 0 when infinite.
  virtual unsigned degree() const = 0;
  /// Number of elements, or 0 when infinite.
  virtual std::uint64_t size() const { return 0; }
  virtual std::string name() const = 0;

  Scalar zero() const { return wrap(zero_repr()); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }
  /// Throws InvalidArgument in characteristic p when the denominator vanishes.
  virtual Scalar from_rational(const mpq_class& v) const = 0;
  /// The distinguished generator: z, u, or the class of x (F_p: 1).
  virtual Scalar generator() const = 0;
  /// Parses the canonical short syntax: "3/2", "z^2-1", "u/(u+1)", "4", "x+1".
  virtual Scalar parse(const std::string& text) const = 0;
  /// A pseudo-random element, used by property tests and sampled checks.
  virtual Scalar random(std::mt19937_64& rng) const = 0;
  /// All field elements (finite fields only).
  std::vector<Scalar> elements() const;

  /// Whether x^2 + b x + c has a root in the field. Throws Unsupported when
  /// the field family provides no decision procedure.
  virtual bool quadratic_has_root(const Scalar& b, const Scalar& c) const;

  // Arithmetic on representations; called through Scalar.
  virtual ScalarRepr zero_repr() const = 0;
  virtual bool is_zero(const ScalarRepr& a) const = 0;
  virtual ScalarRepr add(const ScalarRepr& a, const ScalarRepr& b) const = 0;
  virtual ScalarRepr neg(const ScalarRepr& a) const = 0;
  virtual ScalarRepr mul(const ScalarRepr& a, const ScalarRepr& b) const = 0;
  virtual ScalarRepr inv(const ScalarRepr& a) const = 0;
  virtual std::string format(const ScalarRepr& a) const = 0;

  Scalar wrap(ScalarRepr r) const { return Scalar(shared_from_this(), std::move(r)); }

 protected:
  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {}
  FieldSpec spec_;
};

/// Errors: composite p, reducible modulus, D < 1.
FieldHandle make_field(const FieldSpec& spec);

/// Least d >= 1 with x^d = 1, searched up to the field's torsion bound.
/// Throws InvalidArgument for x = 0.
Order unity_order(const Scalar& x);

bool is_prime(std::uint64_t n);
unsigned euler_phi(unsigned n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// (-1)^e in the scalar's field.
Scalar sign_power(const FieldHandle& field, long long e);

}  // namespace kq
