#include "permorb/qsqrt.hpp"

#include "permorb/error.hpp"

namespace permorb {

QSqrt::QSqrt(Integer radicand, Rational a, Rational b) : radicand_(std::move(radicand)), a_(std::move(a)), b_(std::move(b)) {
  if (radicand_ <= 0) throw Error(ErrorKind::DimensionMismatch, "QSqrt radicand must be positive");
  normalize();
}

void QSqrt::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && is_perfect_square(radicand_)) {
    a_ += b_ * Rational(isqrt(radicand_));
    b_ = 0;
  }
}

void QSqrt::require_same_field(const QSqrt& o) const {
  if (o.radicand_ != radicand_) throw Error(ErrorKind::DimensionMismatch, "QSqrt values from different fields");
}

QSqrt& QSqrt::operator+=(const QSqrt& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QSqrt& QSqrt::operator*=(const QSqrt& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(radicand_);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  normalize();
  return *this;
}

int QSqrt::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 r.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

bool QSqrt::at_least(const Rational& q) const {
  return (*this - QSqrt(radicand_, q)).sign() >= 0;
}

namespace {

std::string coefficient_times(const Rational& c, const std::string& symbol) {
  if (c == 1) return symbol;
  if (c == -1) return "-" + symbol;
  return to_string(c) + "*" + symbol;
}

}  // namespace

std::string to_string(const QSqrt& x) {
  const std::string root = "sqrt(" + to_string(x.radicand()) + ")";
  if (x.sqrt_part() == 0) return to_string(x.rational_part());
  std::string tail = coefficient_times(x.sqrt_part(), root);
  if (x.rational_part() == 0) return tail;
  if (tail.front() != '-') tail = "+" + tail;
  return to_string(x.rational_part()) + tail;
}

}  // namespace permorb
