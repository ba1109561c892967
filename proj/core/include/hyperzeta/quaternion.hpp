#pragma once

#include <string>

#include "hyperzeta/cyclo.hpp"

namespace hyperzeta {

/// Exact rational quaternion w + x i + y j + z k, with ij = k, jk = i, ki = j.
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}
  Quaternion(long w) : w_(w) {}  // NOLINT(google-explicit-constructor)

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  const Rational& w() const noexcept { return w_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  const Rational& z() const noexcept { return z_; }

  bool is_zero() const { return w_ == 0 && x_ == 0 && y_ == 0 && z_ == 0; }
  Quaternion conj() const { return {w_, -x_, -y_, -z_}; }
  /// Reduced norm w^2 + x^2 + y^2 + z^2.
  Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
  /// conj / norm; throws InvalidArgument for zero.
  Quaternion inverse() const;

  Quaternion operator-() const { return {-w_, -x_, -y_, -z_}; }
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;

  /// "num/den" component strings, in the order 1, i, j, k.
  std::string to_string() const;

 private:
  Rational w_{0}, x_{0}, y_{0}, z_{0};
};

}  // namespace hyperzeta
