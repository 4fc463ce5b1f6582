#ifndef SYMGB_COEFFICIENT_HPP
#define SYMGB_COEFFICIENT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace symgb
{

// Coefficient fields. Every field type F exposes a `context_type` that knows
// how to build constants, since a residue needs its modulus to exist at all.

class RationalContext;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational
{
public:
  using context_type = RationalContext;

  Rational() = default;
  explicit Rational(long n) : value_(n) {}
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }
  Rational(long num, long den)
  {
    if (den == 0)
      throw std::domain_error("division by zero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  mpq_class const &value() const noexcept { return value_; }
  context_type context() const noexcept;

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_negative() const noexcept { return sgn(value_) < 0; }

  Rational inverse() const
  {
    if (is_zero())
      throw std::domain_error("division by zero");
    return Rational(mpq_class(1) / value_);
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational &operator+=(Rational const &o) { value_ += o.value_; return *this; }
  Rational &operator-=(Rational const &o) { value_ -= o.value_; return *this; }
  Rational &operator*=(Rational const &o) { value_ *= o.value_; return *this; }
  Rational &operator/=(Rational const &o)
  {
    if (o.is_zero())
      throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, Rational const &b) { return a += b; }
  friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const &b) { return a /= b; }
  friend bool operator==(Rational const &a, Rational const &b) { return a.value_ == b.value_; }

  /// Absolute value as text ("3", "3/2"); the sign is handled by the printer.
  std::string abs_string() const { return mpq_class(abs(value_)).get_str(); }
  std::string to_string() const { return value_.get_str(); }

private:
  mpq_class value_;
};

class RationalContext
{
public:
  Rational from_rational(mpq_class const &q) const { return Rational(q); }
  Rational from_int(long n) const { return Rational(n); }
  Rational zero() const { return Rational(0L); }
  Rational one() const { return Rational(1L); }
  std::string name() const { return "q"; }
  friend bool operator==(RationalContext, RationalContext) { return true; }
};

inline RationalContext Rational::context() const noexcept { return {}; }

class ModPContext;

/// Residue modulo a prime below 2^32, stored in [0, p).
class ModP
{
public:
  using context_type = ModPContext;

  ModP() = default;
  ModP(std::uint64_t value, std::uint64_t modulus) : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  context_type context() const;

  bool is_zero() const noexcept { return value_ == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  bool is_negative() const noexcept { return false; }

  ModP inverse() const
  {
    if (is_zero())
      throw std::domain_error("division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = value_, e = modulus_ - 2;
    while (e > 0) {
      if (e & 1U)
        result = result * base % modulus_;
      base = base * base % modulus_;
      e >>= 1U;
    }
    return {result, modulus_};
  }

  ModP operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }
  ModP &operator+=(ModP const &o)
  {
    check(o);
    value_ = (value_ + o.value_) % modulus_;
    return *this;
  }
  ModP &operator-=(ModP const &o)
  {
    check(o);
    value_ = (value_ + modulus_ - o.value_) % modulus_;
    return *this;
  }
  ModP &operator*=(ModP const &o)
  {
    check(o);
    value_ = value_ * o.value_ % modulus_;
    return *this;
  }
  ModP &operator/=(ModP const &o)
  {
    check(o);
    return *this *= o.inverse();
  }

  friend ModP operator+(ModP a, ModP const &b) { return a += b; }
  friend ModP operator-(ModP a, ModP const &b) { return a -= b; }
  friend ModP operator*(ModP a, ModP const &b) { return a *= b; }
  friend ModP operator/(ModP a, ModP const &b) { return a /= b; }
  friend bool operator==(ModP const &a, ModP const &b)
  {
    a.check(b);
    return a.value_ == b.value_;
  }

  std::string abs_string() const { return std::to_string(value_); }
  std::string to_string() const { return std::to_string(value_); }

private:
  void check(ModP const &o) const
  {
    if (modulus_ != o.modulus_)
      throw DomainMismatch("coefficients modulo " + std::to_string(modulus_) + " and " +
                           std::to_string(o.modulus_) + " cannot be mixed");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

class ModPContext
{
public:
  explicit ModPContext(std::uint64_t p) : p_(p)
  {
    if (p >= (std::uint64_t{1} << 32U) || !is_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
  }

  std::uint64_t modulus() const noexcept { return p_; }

  ModP from_int(long n) const
  {
    auto const p = static_cast<long long>(p_);
    long long r = static_cast<long long>(n) % p;
    return {static_cast<std::uint64_t>(r < 0 ? r + p : r), p_};
  }

  ModP from_rational(mpq_class const &q) const
  {
    mpz_class const p(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0)
      num += p;
    if (den == 0)
      throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    ModP a(num.get_ui(), p_), b(den.get_ui(), p_);
    return a / b;
  }

  ModP zero() const { return {0, p_}; }
  ModP one() const { return {1, p_}; }
  std::string name() const { return "fp:" + std::to_string(p_); }
  friend bool operator==(ModPContext const &a, ModPContext const &b) { return a.p_ == b.p_; }

private:
  std::uint64_t p_;
};

inline ModPContext ModP::context() const { return ModPContext(modulus_); }

template<class F>
concept Field = requires(F a, F const &b, typename F::context_type const &ctx, mpq_class const &q) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a.is_negative() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<F>;
  { a.abs_string() } -> std::same_as<std::string>;
  { ctx.from_rational(q) } -> std::same_as<F>;
  { ctx.from_int(1L) } -> std::same_as<F>;
  { ctx.one() } -> std::same_as<F>;
};

} // namespace symgb

#endif // SYMGB_COEFFICIENT_HPP
