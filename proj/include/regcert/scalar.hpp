#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace regcert {

/// Coefficient field selector: 0 means the rationals, otherwise a prime p.
class FieldSpec {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit FieldSpec(std::uint32_t characteristic = kDefaultPrime);

  static FieldSpec rationals() { return FieldSpec(0); }

  std::uint32_t characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t characteristic_;
};

bool is_prime(std::uint64_t n);

/// Element of GF(p). The modulus travels with the value so that elements are
/// self-contained; mixing moduli is a logic error.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t value, const FieldSpec& field);
  Zp(const mpq_class& value, const FieldSpec& field);

  static Zp zero(const FieldSpec& field) { return Zp(0, field); }
  static Zp one(const FieldSpec& field) { return Zp(1, field); }

  std::uint32_t residue() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  FieldSpec field() const { return FieldSpec(modulus_); }

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }
  Zp inverse() const;

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t symmetric() const;
  std::string to_string() const;

  Zp operator-() const;
  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o) { return *this *= o.inverse(); }

  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
  friend bool operator==(const Zp& a, const Zp& b) { return a.value_ == b.value_; }

 private:
  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = FieldSpec::kDefaultPrime;
};

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value, const FieldSpec& field);
  Rational(const mpq_class& value, const FieldSpec& field);
  explicit Rational(mpq_class value);

  static Rational zero(const FieldSpec& field) { return Rational(0, field); }
  static Rational one(const FieldSpec& field) { return Rational(1, field); }

  const mpq_class& value() const { return q_; }
  FieldSpec field() const { return FieldSpec::rationals(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  Rational inverse() const;

  std::string to_string() const { return q_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Zp& a);
std::ostream& operator<<(std::ostream& os, const Rational& a);

/// Sign of the value as it should be printed (Zp uses the symmetric lift).
inline bool prints_negative(const Zp& a) { return a.symmetric() < 0; }
inline bool prints_negative(const Rational& a) { return sgn(a.value()) < 0; }

}  // namespace regcert
