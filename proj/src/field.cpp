#include "koszulq/field.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace kq {

namespace poly {

namespace {

template <class R, class Fmt>
std::string format_poly(const Poly<R>& a, char var, Fmt coeff_str, const R& ring) {
  if (a.empty()) return "0";
  std::string out;
  for (int k = degree<R>(a); k >= 0; --k) {
    const auto& c = a[k];
    if (ring.is_zero(c)) continue;
    std::string cs = coeff_str(c);
    const bool negative = !cs.empty() && cs[0] == '-';
    if (!out.empty() && !negative) out += '+';
    if (k == 0) {
      out += cs;
      continue;
    }
    if (cs == "1") {
    } else if (cs == "-1") {
      out += '-';
    } else {
      out += cs + "*";
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string to_string(const Poly<RationalRing>& a, char var) {
  return format_poly(a, var, [](const mpq_class& c) { return c.get_str(); }, RationalRing{});
}

std::string to_string(const Poly<PrimeRing>& a, char var) {
  return format_poly(a, var, [](std::uint64_t c) { return std::to_string(c); }, PrimeRing{2});
}

}  // namespace poly

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned k = 2; k * k <= n; ++k) {
    if (n % k) continue;
    while (n % k == 0) n /= k;
    result -= result / k;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// Scalar

namespace {

const Field& checked_field(const Scalar& a) {
  if (!a.valid()) throw InvalidArgument("use of an uninitialised scalar");
  return *a.field();
}

void check_same(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid()) throw InvalidArgument("use of an uninitialised scalar");
  if (a.field() != b.field() && a.field()->name() != b.field()->name())
    throw InvalidArgument("scalars from different fields: " + a.field()->name() + " vs " +
                          b.field()->name());
}

}  // namespace

bool Scalar::is_zero() const { return checked_field(*this).is_zero(repr_); }
bool Scalar::is_one() const { return *this == field_->one(); }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  return Scalar(field_, field_->add(repr_, o.repr_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(*this, o);
  return Scalar(field_, field_->add(repr_, field_->neg(o.repr_)));
}

Scalar Scalar::operator-() const { return Scalar(field_, checked_field(*this).neg(repr_)); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  return Scalar(field_, field_->mul(repr_, o.repr_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  const Field& f = checked_field(*this);
  if (f.is_zero(repr_)) throw InvalidArgument("inverse of zero");
  return Scalar(field_, f.inv(repr_));
}

Scalar Scalar::pow(long long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Scalar result = field_->one();
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(*this, o);
  return repr_ == o.repr_;
}

std::string Scalar::to_string() const { return checked_field(*this).format(repr_); }

std::string Scalar::short_string() const {
  std::string text = to_string();
  auto at = text.find(" mod ");
  return at == std::string::npos ? text : text.substr(0, at);
}

// ---------------------------------------------------------------------------
// Expression parser shared by all families: + - * / ^ parentheses, integer
// literals and one variable name.

namespace {

class ExprParser {
 public:
  ExprParser(const Field& field, char var, std::string text)
      : field_(field), var_(var), text_(std::move(text)) {}

  Scalar run() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse scalar \"" + text_ + "\" in " + field_.name() + ": " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool negative = eat('-');
      long long e = integer();
      if (negative && base.is_zero()) fail("zero to a negative power");
      base = base.pow(negative ? -e : e);
    }
    return base;
  }
  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoll(text_.substr(start, pos_ - start));
  }
  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < text_.size() && text_[pos_] == var_) {
      ++pos_;
      return field_.generator();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number or '" + std::string(1, var_) + "'");
    return field_.from_rational(mpq_class(mpz_class(text_.substr(start, pos_ - start))));
  }

  const Field& field_;
  char var_;
  std::string text_;
  std::size_t pos_ = 0;
};

std::string strip_suffix(const std::string& text) {
  auto at = text.find(" mod ");
  return at == std::string::npos ? text : text.substr(0, at);
}

// ---------------------------------------------------------------------------
// Q and Q(z) share one implementation: Q is Q(z)/Phi_1.

class CyclotomicField final : public Field {
 public:
  explicit CyclotomicField(const FieldSpec& spec)
      : Field(spec), phi_(poly::cyclotomic_polynomial(spec.D)) {}

  std::uint64_t characteristic() const override { return 0; }
  std::uint64_t torsion_bound() const override { return lcm_u64(2, spec_.D); }
  unsigned degree() const override { return static_cast<unsigned>(phi_.size() - 1); }
  std::string name() const override {
    return kind() == FieldKind::rationals ? "Q" : "Q(zeta_" + std::to_string(spec_.D) + ")";
  }

  Scalar from_rational(const mpq_class& v) const override {
    QPoly r;
    if (sgn(v) != 0) r.push_back(v);
    return wrap(std::move(r));
  }
  Scalar generator() const override { return wrap(reduce(QPoly{0, 1})); }
  Scalar parse(const std::string& text) const override {
    return ExprParser(*this, 'z', strip_suffix(text)).run();
  }
  Scalar random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    QPoly r;
    for (unsigned k = 0; k < degree(); ++k) r.push_back(mpq_class(num(rng), den(rng)));
    for (auto& c : r) c.canonicalize();
    poly::trim(Q_, r);
    return wrap(std::move(r));
  }
  bool quadratic_has_root(const Scalar& b, const Scalar& c) const override {
    if (degree() != 1) return Field::quadratic_has_root(b, c);
    const auto& bp = std::get<QPoly>(b.repr());
    const auto& cp = std::get<QPoly>(c.repr());
    mpq_class bb = bp.empty() ? mpq_class(0) : bp[0];
    mpq_class cc = cp.empty() ? mpq_class(0) : cp[0];
    mpq_class disc = bb * bb - 4 * cc;
    if (sgn(disc) < 0) return false;
    return mpz_perfect_square_p(disc.get_num_mpz_t()) && mpz_perfect_square_p(disc.get_den_mpz_t());
  }

  ScalarRepr zero_repr() const override { return QPoly{}; }
  bool is_zero(const ScalarRepr& a) const override { return std::get<QPoly>(a).empty(); }
  ScalarRepr add(const ScalarRepr& a, const ScalarRepr& b) const override {
    return poly::add(Q_, std::get<QPoly>(a), std::get<QPoly>(b));
  }
  ScalarRepr neg(const ScalarRepr& a) const override { return poly::neg(Q_, std::get<QPoly>(a)); }
  ScalarRepr mul(const ScalarRepr& a, const ScalarRepr& b) const override {
    const auto& x = std::get<QPoly>(a);
    const auto& y = std::get<QPoly>(b);
    if (x.size() == 1 && y.size() == 1) return QPoly{x[0] * y[0]};
    return reduce(poly::mul(Q_, x, y));
  }
  ScalarRepr inv(const ScalarRepr& a) const override {
    const auto& x = std::get<QPoly>(a);
    if (x.size() == 1) return QPoly{1 / x[0]};
    return poly::inverse_mod(Q_, x, phi_);
  }
  std::string format(const ScalarRepr& a) const override {
    const auto& x = std::get<QPoly>(a);
    if (kind() == FieldKind::rationals) return x.empty() ? "0" : x[0].get_str();
    return poly::to_string(x, 'z') + " mod Phi_" + std::to_string(spec_.D);
  }

 private:
  QPoly reduce(QPoly a) const {
    if (a.size() < phi_.size()) return a;
    return poly::rem(Q_, a, phi_);
  }

  poly::RationalRing Q_;
  QPoly phi_;
};

// ---------------------------------------------------------------------------
// Q(u)

class RationalFunctionField final : public Field {
 public:
  explicit RationalFunctionField(const FieldSpec& spec) : Field(spec) {}

  std::uint64_t characteristic() const override { return 0; }
  std::uint64_t torsion_bound() const override { return 2; }
  unsigned degree() const override { return 0; }
  std::string name() const override { return "Q(u)"; }

  Scalar from_rational(const mpq_class& v) const override {
    RatFunc r{{}, {mpq_class(1)}};
    if (sgn(v) != 0) r.num.push_back(v);
    return wrap(std::move(r));
  }
  Scalar generator() const override { return wrap(RatFunc{{0, 1}, {1}}); }
  Scalar parse(const std::string& text) const override { return ExprParser(*this, 'u', text).run(); }
  Scalar random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<int> c(-5, 5), deg(0, 2);
    QPoly num, den;
    for (int k = 0, n = deg(rng); k <= n; ++k) num.push_back(c(rng));
    for (int k = 0, n = deg(rng) % 2; k < n; ++k) den.push_back(c(rng));
    den.push_back(1);
    poly::trim(Q_, num);
    return wrap(normalize(std::move(num), std::move(den)));
  }

  ScalarRepr zero_repr() const override { return RatFunc{{}, {mpq_class(1)}}; }
  bool is_zero(const ScalarRepr& a) const override { return std::get<RatFunc>(a).num.empty(); }
  ScalarRepr add(const ScalarRepr& a, const ScalarRepr& b) const override {
    const auto& x = std::get<RatFunc>(a);
    const auto& y = std::get<RatFunc>(b);
    if (x.den == y.den) return normalize(poly::add(Q_, x.num, y.num), x.den);
    return normalize(poly::add(Q_, poly::mul(Q_, x.num, y.den), poly::mul(Q_, y.num, x.den)),
                     poly::mul(Q_, x.den, y.den));
  }
  ScalarRepr neg(const ScalarRepr& a) const override {
    const auto& x = std::get<RatFunc>(a);
    return RatFunc{poly::neg(Q_, x.num), x.den};
  }
  ScalarRepr mul(const ScalarRepr& a, const ScalarRepr& b) const override {
    const auto& x = std::get<RatFunc>(a);
    const auto& y = std::get<RatFunc>(b);
    return normalize(poly::mul(Q_, x.num, y.num), poly::mul(Q_, x.den, y.den));
  }
  ScalarRepr inv(const ScalarRepr& a) const override {
    const auto& x = std::get<RatFunc>(a);
    return normalize(x.den, x.num);
  }
  std::string format(const ScalarRepr& a) const override {
    const auto& x = std::get<RatFunc>(a);
    std::string num = poly::to_string(x.num, 'u');
    if (x.den.size() == 1) return num;
    auto wrap_terms = [](const QPoly& p, const std::string& s) {
      std::size_t nonzero = 0;
      for (const auto& c : p) nonzero += sgn(c) != 0;
      bool plain_coeff = nonzero == 1 && (sgn(p.back()) > 0) && (p.back() == 1 || p.size() == 1);
      return plain_coeff ? s : "(" + s + ")";
    };
    return wrap_terms(x.num, num) + "/" + wrap_terms(x.den, poly::to_string(x.den, 'u'));
  }

 private:
  RatFunc normalize(QPoly num, QPoly den) const {
    if (den.empty()) throw InvalidArgument("rational function with zero denominator");
    if (num.empty()) return RatFunc{{}, {mpq_class(1)}};
    if (den.size() > 1) {
      auto g = poly::gcd(Q_, num, den);
      if (g.size() > 1) {
        num = poly::divmod(Q_, num, g).first;
        den = poly::divmod(Q_, den, g).first;
      }
    }
    mpq_class lead = den.back();
    if (lead != 1) {
      num = poly::scale(Q_, 1 / lead, num);
      den = poly::scale(Q_, 1 / lead, den);
    }
    return RatFunc{std::move(num), std::move(den)};
  }

  poly::RationalRing Q_;
};

// ---------------------------------------------------------------------------
// F_p and F_p[x]/(f)

class FiniteField final : public Field {
 public:
  explicit FiniteField(const FieldSpec& spec) : Field(spec), F_{spec.p} {
    modulus_ = spec.modulus;
    if (modulus_.empty()) modulus_ = {0, 1};  // x: F_p itself
    poly::trim(F_, modulus_);
    modulus_ = poly::monic(F_, modulus_);
    std::uint64_t q = 1;
    for (unsigned k = 0; k < degree(); ++k) q *= spec.p;
    size_ = q;
  }

  std::uint64_t characteristic() const override { return spec_.p; }
  std::uint64_t torsion_bound() const override { return size_ - 1; }
  unsigned degree() const override { return static_cast<unsigned>(modulus_.size() - 1); }
  std::uint64_t size() const override { return size_; }
  std::string name() const override {
    if (degree() == 1) return "F_" + std::to_string(spec_.p);
    return "F_" + std::to_string(spec_.p) + "[x]/(" + poly::to_string(modulus_, 'x') + ")";
  }

  Scalar from_rational(const mpq_class& v) const override {
    mpz_class p(static_cast<unsigned long>(spec_.p));
    mpz_class num = v.get_num() % p, den = v.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) throw InvalidArgument("denominator vanishes in " + name());
    auto n = static_cast<std::uint64_t>(num.get_ui());
    auto d = static_cast<std::uint64_t>(den.get_ui());
    FpPoly r;
    if (n) r.push_back(F_.mul(n, F_.inv(d)));
    return wrap(std::move(r));
  }
  Scalar generator() const override { return wrap(poly::rem(F_, FpPoly{0, 1}, modulus_)); }
  Scalar parse(const std::string& text) const override {
    return ExprParser(*this, 'x', strip_suffix(text)).run();
  }
  Scalar random(std::mt19937_64& rng) const override {
    std::uniform_int_distribution<std::uint64_t> c(0, spec_.p - 1);
    FpPoly r;
    for (unsigned k = 0; k < degree(); ++k) r.push_back(c(rng));
    poly::trim(F_, r);
    return wrap(std::move(r));
  }

  ScalarRepr zero_repr() const override { return FpPoly{}; }
  bool is_zero(const ScalarRepr& a) const override { return std::get<FpPoly>(a).empty(); }
  ScalarRepr add(const ScalarRepr& a, const ScalarRepr& b) const override {
    return poly::add(F_, std::get<FpPoly>(a), std::get<FpPoly>(b));
  }
  ScalarRepr neg(const ScalarRepr& a) const override { return poly::neg(F_, std::get<FpPoly>(a)); }
  ScalarRepr mul(const ScalarRepr& a, const ScalarRepr& b) const override {
    return poly::mulmod(F_, std::get<FpPoly>(a), std::get<FpPoly>(b), modulus_);
  }
  ScalarRepr inv(const ScalarRepr& a) const override {
    return poly::inverse_mod(F_, std::get<FpPoly>(a), modulus_);
  }
  std::string format(const ScalarRepr& a) const override {
    const auto& x = std::get<FpPoly>(a);
    if (degree() == 1)
      return (x.empty() ? std::string("0") : std::to_string(x[0])) + " mod " + std::to_string(spec_.p);
    return poly::to_string(x, 'x') + " mod " + std::to_string(spec_.p) + ":" +
           poly::to_string(modulus_, 'x');
  }

 private:
  poly::PrimeRing F_;
  FpPoly modulus_;
  std::uint64_t size_ = 0;
};

}  // namespace

std::vector<Scalar> Field::elements() const {
  const std::uint64_t q = size();
  if (q == 0) throw Unsupported("cannot enumerate the elements of " + name());
  const std::uint64_t p = characteristic();
  std::vector<Scalar> out;
  out.reserve(q);
  for (std::uint64_t code = 0; code < q; ++code) {
    FpPoly r;
    for (std::uint64_t c = code; c; c /= p) r.push_back(c % p);
    poly::trim(poly::PrimeRing{p}, r);
    out.push_back(wrap(std::move(r)));
  }
  return out;
}

bool Field::quadratic_has_root(const Scalar& b, const Scalar& c) const {
  const std::uint64_t q = size();
  if (q == 0 || q > (1u << 20))
    throw Unsupported("no root-finding procedure for quadratics over " + name());
  for (const Scalar& x : elements())
    if ((x * x + b * x + c).is_zero()) return true;
  return false;
}

FieldHandle make_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::rationals: {
      FieldSpec s = spec;
      s.D = 1;
      return std::make_shared<CyclotomicField>(s);
    }
    case FieldKind::cyclotomic:
      if (spec.D < 1) throw InvalidArgument("cyclotomic order must be at least 1");
      return std::make_shared<CyclotomicField>(spec);
    case FieldKind::rational_function:
      return std::make_shared<RationalFunctionField>(spec);
    case FieldKind::finite: {
      if (!is_prime(spec.p)) throw InvalidArgument(std::to_string(spec.p) + " is not prime");
      if (!spec.modulus.empty()) {
        poly::PrimeRing F{spec.p};
        FpPoly f;
        for (auto c : spec.modulus) f.push_back(c % spec.p);
        poly::trim(F, f);
        if (!poly::is_irreducible(F, f))
          throw InvalidArgument("modulus " + poly::to_string(f, 'x') + " is reducible over F_" +
                                std::to_string(spec.p));
        FieldSpec s = spec;
        s.modulus = f;
        return std::make_shared<FiniteField>(s);
      }
      return std::make_shared<FiniteField>(spec);
    }
  }
  throw InvalidArgument("unknown field kind");
}

Order unity_order(const Scalar& x) {
  if (x.is_zero()) throw InvalidArgument("unity_order of zero");
  const std::uint64_t bound = x.field()->torsion_bound();
  Scalar power = x;
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (power.is_one()) return d;
    power *= x;
  }
  return std::nullopt;
}

Scalar sign_power(const FieldHandle& field, long long e) {
  return (e % 2 == 0) ? field->one() : -field->one();
}

}  // namespace kq
