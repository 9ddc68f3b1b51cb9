#include "regcert/scalar.hpp"

#include <ostream>

namespace regcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                " is not prime");
  }
  // Products of two residues must fit in 64 bits.
  if (characteristic >= (1u << 31)) {
    throw std::invalid_argument("characteristic too large");
  }
}

std::string FieldSpec::name() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(characteristic_) + ")";
}

// ---------------------------------------------------------------------------

Zp::Zp(std::int64_t value, const FieldSpec& field) : modulus_(field.characteristic()) {
  if (modulus_ == 0) throw std::invalid_argument("Zp requires a prime field");
  std::int64_t r = value % static_cast<std::int64_t>(modulus_);
  if (r < 0) r += modulus_;
  value_ = static_cast<std::uint32_t>(r);
}

Zp::Zp(const mpq_class& value, const FieldSpec& field) : modulus_(field.characteristic()) {
  if (modulus_ == 0) throw std::invalid_argument("Zp requires a prime field");
  mpz_class num = value.get_num() % modulus_;
  mpz_class den = value.get_den() % modulus_;
  if (den == 0) {
    throw std::domain_error("denominator " + value.get_den().get_str() +
                            " vanishes modulo " + std::to_string(modulus_));
  }
  if (num < 0) num += modulus_;
  Zp n(static_cast<std::int64_t>(num.get_si()), field);
  Zp d(static_cast<std::int64_t>(den.get_si()), field);
  *this = n / d;
}

Zp Zp::inverse() const {
  if (value_ == 0) throw std::domain_error("division by zero in " + field().name());
  std::int64_t a = value_, m = modulus_, x0 = 1, x1 = 0;
  while (m != 0) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  Zp r;
  r.modulus_ = modulus_;
  std::int64_t v = x0 % static_cast<std::int64_t>(modulus_);
  if (v < 0) v += modulus_;
  r.value_ = static_cast<std::uint32_t>(v);
  return r;
}

std::int64_t Zp::symmetric() const {
  return value_ > modulus_ / 2 ? static_cast<std::int64_t>(value_) - modulus_ : value_;
}

std::string Zp::to_string() const { return std::to_string(symmetric()); }

Zp Zp::operator-() const {
  Zp r = *this;
  r.value_ = value_ == 0 ? 0 : modulus_ - value_;
  return r;
}

Zp& Zp::operator+=(const Zp& o) {
  std::uint32_t s = value_ + o.value_;
  value_ = s >= modulus_ ? s - modulus_ : s;
  return *this;
}

Zp& Zp::operator-=(const Zp& o) {
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
  return *this;
}

Zp& Zp::operator*=(const Zp& o) {
  value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_);
  return *this;
}

// ---------------------------------------------------------------------------

Rational::Rational(std::int64_t value, const FieldSpec& field) {
  if (!field.is_rational()) throw std::invalid_argument("Rational requires characteristic 0");
  q_ = mpq_class(mpz_class(static_cast<long>(value)));
}

Rational::Rational(const mpq_class& value, const FieldSpec& field) : q_(value) {
  if (!field.is_rational()) throw std::invalid_argument("Rational requires characteristic 0");
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in QQ");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in QQ");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

}  // namespace regcert
