#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "tropmod/errors.hpp"

namespace tropmod {

// Exact rational number. Thin wrapper over GMP's mpq_class that keeps the
// value canonicalized and adds "p/q" string parsing/formatting. All weight,
// divisor, and length arithmetic in this library goes through this type;
// wall membership and stability are razor-thin strict inequalities, so no
// floating point is allowed anywhere near them.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int
  Rational(long num, long den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p", "-p", or "p/q" with arbitrary precision integers.
  static Rational parse(const std::string& text);

  std::string str() const;  // "p" when integral, else "p/q"

  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.v_ == 0) throw ValidationError("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// A length value in the extended positive reals: either a finite rational
// or the symbolic value infinity. Infinity is absorbing under addition and
// compares strictly above every finite value.
class ExtRational {
public:
  ExtRational() : inf_(false), v_(0) {}
  ExtRational(Rational v) : inf_(false), v_(std::move(v)) {}  // NOLINT
  ExtRational(long n) : inf_(false), v_(n) {}                 // NOLINT
  static ExtRational infinity() {
    ExtRational e;
    e.inf_ = true;
    return e;
  }
  static ExtRational parse(const std::string& text);  // "p/q" or "inf"

  bool is_infinite() const { return inf_; }
  // Finite value; calling this on infinity is a bug.
  const Rational& finite_value() const {
    if (inf_) throw InternalError("finite_value() on infinity");
    return v_;
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

  ExtRational operator+(const ExtRational& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtRational(v_ + o.v_);
  }

  bool operator==(const ExtRational& o) const {
    if (inf_ != o.inf_) return false;
    return inf_ || v_ == o.v_;
  }
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
  bool operator<(const ExtRational& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator>(const ExtRational& o) const { return o < *this; }

  int sign() const { return inf_ ? 1 : v_.sign(); }

private:
  bool inf_;
  Rational v_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

}  // namespace tropmod
