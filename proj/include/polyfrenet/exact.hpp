#pragma once

// Exact number types shared by the frame recursions and the classifiers.
//
// Rational is GMP's mpq_class. CheckedInt is an int64 ring element that throws
// on overflow; sweeps over dyadic grids are rescaled to integers and run on it.
// QuadraticSurd holds a + b*sqrt(d) with rational a, b, d, which is all the
// classification theorems ever need (roots of quadratics in squared curvature).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfrenet {

using Rational = mpq_class;

/// Parses "3", "-7/4", "0.25", "1e-3", "2.5e2" into an exact rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

bool is_perfect_square(const Rational& q);
/// Throws std::domain_error unless q is the square of a rational.
Rational exact_sqrt(const Rational& q);

Rational pow(const Rational& base, unsigned exponent);

/// num/den in lowest terms. mpq_class(num, den) skips this and breaks ==.
Rational ratio(long num, long den);

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: addition overflow");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: subtraction overflow");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("CheckedInt: multiplication overflow");
    return r;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }

  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend auto operator<=>(CheckedInt a, CheckedInt b) { return a.v_ <=> b.v_; }

 private:
  std::int64_t v_ = 0;
};

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(CheckedInt x) { return x.value() == 0; }

inline double to_double(double x) { return x; }
inline double to_double(CheckedInt x) { return static_cast<double>(x.value()); }

/// a + b*sqrt(d) with d >= 0. Normalized so that b == 0 whenever sqrt(d) is
/// rational, which makes structural equality coincide with numeric equality.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(int a) : a_(a) {}                   // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational a, Rational b, Rational d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const;
  double to_double() const;
  /// "a", "a + b*sqrt(d)" or "a - b*sqrt(d)" with exact rationals.
  std::string to_string() const;

  /// Field operations inside Q(sqrt(d)); mixing two different irrational radicands throws.
  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
  QuadraticSurd operator-() const { return QuadraticSurd(-a_, -b_, d_); }
  QuadraticSurd& operator+=(const QuadraticSurd& o) { return *this = *this + o; }
  QuadraticSurd& operator-=(const QuadraticSurd& o) { return *this = *this - o; }
  QuadraticSurd& operator*=(const QuadraticSurd& o) { return *this = *this * o; }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  /// Exact three-way comparison; supported when both share a radicand or one is rational.
  friend int compare(const QuadraticSurd& x, const QuadraticSurd& y);
  friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return compare(x, y) < 0; }

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Rational d_ = 0;
};

inline bool is_zero(const QuadraticSurd& q) { return q.sign() == 0; }

}  // namespace polyfrenet
