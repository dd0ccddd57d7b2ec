#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lieorb {

/// Exact rational number. Always stored in lowest terms with positive
/// denominator; every operation is exact, nothing ever rounds.
///
/// Backed by GMP's mpq_class; this wrapper pins the canonical-form
/// invariant and the "p" / "p/q" string format used at module boundaries.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor) — literals are pervasive
  Rat(long num, long den);

  /// Parses "p" or "p/q" (optional sign, decimal digits). Throws ParseError.
  static Rat parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Decimal string, "p" when the denominator is 1, else "p/q".
  std::string str() const;

  /// Numerator as decimal string (sign included).
  std::string num_str() const { return v_.get_num().get_str(); }
  /// Denominator as decimal string (always positive).
  std::string den_str() const { return v_.get_den().get_str(); }

  bool is_integer() const { return v_.get_den() == 1; }

  /// Least common multiple of two positive integers, as a Rat helper for
  /// denominator clearing.
  static Rat den_lcm(const Rat& a, const Rat& b);

  Rat operator-() const { return Rat(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
bool is_zero(const Vec& v);
Rat dot(const Vec& a, const Vec& b);
Vec unit_vec(std::size_t n, std::size_t i);

}  // namespace lieorb
