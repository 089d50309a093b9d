#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace hopfcyc {

/// Raised when an internal identity that must hold by construction fails
/// (a non-complex, an operator that does not preserve its subspace, ...).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Ground field of a computation: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { rationals, prime_field };

  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws std::domain_error unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return kind_ == Kind::rationals; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t p_ = 0;
};

/// An exact element of a Field. Scalars of different fields never mix.
class Scalar {
 public:
  Scalar() : value_(ModP{0, 0}) {}  // the zero of an unspecified field; adopts the other operand's field

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(const Field& f, long n);
  /// num/den reduced into the field; a denominator divisible by p is a domain error.
  static Scalar from_rational(const Field& f, const mpq_class& q);

  bool is_zero() const;
  bool is_one() const;

  /// Exact rational value (for F_p, the representative in [0, p)).
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  struct ModP {
    std::uint32_t v;
    std::uint32_t p;  // 0 marks the field-less zero
  };
  explicit Scalar(ModP m) : value_(m) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  void unify(const Scalar& o);

  std::variant<ModP, mpq_class> value_;
};

}  // namespace hopfcyc
