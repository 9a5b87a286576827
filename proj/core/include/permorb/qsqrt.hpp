#pragma once

#include <string>

#include "permorb/arith.hpp"

namespace permorb {

/// Exact element a + b*sqrt(r) of Q(sqrt r) for a fixed positive radicand r.
/// When r is a perfect square the value is folded into `a` and b is kept 0,
/// so equal numbers always compare equal field by field.
class QSqrt {
 public:
  explicit QSqrt(Integer radicand, Rational a = 0, Rational b = 0);

  static QSqrt sqrt_of(const Integer& radicand) { return QSqrt(radicand, 0, 1); }

  const Integer& radicand() const noexcept { return radicand_; }
  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt_part() const noexcept { return b_; }

  QSqrt& operator+=(const QSqrt& o);
  QSqrt& operator-=(const QSqrt& o);
  QSqrt& operator*=(const QSqrt& o);
  friend QSqrt operator+(QSqrt x, const QSqrt& y) { return x += y; }
  friend QSqrt operator-(QSqrt x, const QSqrt& y) { return x -= y; }
  friend QSqrt operator*(QSqrt x, const QSqrt& y) { return x *= y; }
  friend QSqrt operator*(long k, QSqrt x) { return x *= QSqrt(x.radicand_, k); }

  friend bool operator==(const QSqrt& x, const QSqrt& y) {
    return x.radicand_ == y.radicand_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Sign of the real number, decided with integer arithmetic only.
  int sign() const;
  /// this >= q as real numbers.
  bool at_least(const Rational& q) const;

 private:
  void normalize();
  void require_same_field(const QSqrt& o) const;

  Integer radicand_;
  Rational a_;
  Rational b_;
};

/// "a+b*sqrt(r)" with zero terms and unit coefficients elided: "2", "sqrt(3)",
/// "1-2*sqrt(5)", "0".
std::string to_string(const QSqrt& x);

}  // namespace permorb
