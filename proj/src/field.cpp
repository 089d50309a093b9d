#include "hopfcyc/field.hpp"

#include <charconv>

namespace hopfcyc {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::domain_error("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  Field f;
  f.kind_ = Kind::prime_field;
  f.p_ = p;
  return f;
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = text.data() + 3;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc{} || ptr != last || first == last)
      throw std::domain_error("malformed field descriptor '" + text + "'");
    return prime(p);
  }
  throw std::domain_error("unknown field descriptor '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }
Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long n) {
  if (f.is_rational()) return Scalar(mpq_class(n));
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  long r = n % static_cast<long>(p);
  if (r < 0) r += p;
  return Scalar(ModP{static_cast<std::uint32_t>(r), p});
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(std::move(c));
  }
  const auto p = static_cast<std::uint32_t>(f.characteristic());
  const std::uint32_t den = reduce_mpz(q.get_den(), p);
  if (den == 0)
    throw std::domain_error("denominator " + q.get_den().get_str() + " is not invertible in " + f.to_string());
  const std::uint64_t num = reduce_mpz(q.get_num(), p);
  return Scalar(ModP{static_cast<std::uint32_t>(num * inverse_mod(den, p) % p), p});
}

bool Scalar::is_zero() const {
  if (auto* m = std::get_if<ModP>(&value_)) return m->v == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* m = std::get_if<ModP>(&value_)) return m->p != 0 && m->v == 1;
  return std::get<mpq_class>(value_) == 1;
}

mpq_class Scalar::to_rational() const {
  if (auto* m = std::get_if<ModP>(&value_)) return mpq_class(m->v);
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (auto* m = std::get_if<ModP>(&value_)) return std::to_string(m->v);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::unify(const Scalar& o) {
  // Adopt the other operand's field when this is the field-less zero.
  if (auto* m = std::get_if<ModP>(&value_); m && m->p == 0) {
    if (std::holds_alternative<mpq_class>(o.value_)) {
      value_ = mpq_class(0);
    } else {
      m->p = std::get<ModP>(o.value_).p;
    }
  }
}

Scalar Scalar::operator-() const {
  if (auto* m = std::get_if<ModP>(&value_)) return Scalar(ModP{m->v == 0 ? 0 : m->p - m->v, m->p});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  unify(o);
  if (auto* m = std::get_if<ModP>(&value_)) {
    if (auto* n = std::get_if<ModP>(&o.value_)) {
      if (n->p == 0) return *this;
      m->v = static_cast<std::uint32_t>((std::uint64_t{m->v} + n->v) % m->p);
      return *this;
    }
    throw std::logic_error("mixed-field scalar arithmetic");
  }
  if (auto* n = std::get_if<ModP>(&o.value_)) {
    if (n->p == 0) return *this;
    throw std::logic_error("mixed-field scalar arithmetic");
  }
  std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  unify(o);
  if (auto* m = std::get_if<ModP>(&value_)) {
    if (auto* n = std::get_if<ModP>(&o.value_)) {
      if (n->p == 0) {
        m->v = 0;
        return *this;
      }
      m->v = static_cast<std::uint32_t>(std::uint64_t{m->v} * n->v % m->p);
      return *this;
    }
    throw std::logic_error("mixed-field scalar arithmetic");
  }
  if (auto* n = std::get_if<ModP>(&o.value_)) {
    if (n->p == 0) {
      value_ = mpq_class(0);
      return *this;
    }
    throw std::logic_error("mixed-field scalar arithmetic");
  }
  std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  unify(o);
  if (auto* m = std::get_if<ModP>(&value_)) {
    const auto& n = std::get<ModP>(o.value_);
    m->v = static_cast<std::uint32_t>(std::uint64_t{m->v} * inverse_mod(n.v, n.p) % n.p);
    return *this;
  }
  std::get<mpq_class>(value_) /= std::get<mpq_class>(o.value_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.value_.index() != b.value_.index()) return false;
  if (auto* m = std::get_if<Scalar::ModP>(&a.value_)) {
    const auto& n = std::get<Scalar::ModP>(b.value_);
    return m->v == n.v && m->p == n.p;
  }
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

}  // namespace hopfcyc
